#ifndef SEPSG_SEMIGROUP_HPP_
#define SEPSG_SEMIGROUP_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sepsg/error.hpp"

namespace sepsg {

  using Element = std::uint8_t;

  inline constexpr std::size_t kMaxOrder = 64;
  // Largest order for which operations that walk every subset are allowed.
  inline constexpr std::size_t kMaxEnumerableOrder = 20;

  //! A subset of the elements {0, ..., n-1} of a semigroup of order n.
  class SubsetMask {
   public:
    SubsetMask() = default;
    SubsetMask(std::size_t ambient, std::uint64_t bits);

    static SubsetMask empty(std::size_t ambient) { return {ambient, 0}; }
    static SubsetMask full(std::size_t ambient);
    static SubsetMask singleton(std::size_t ambient, std::size_t x);

    std::size_t ambient() const noexcept { return _ambient; }
    std::uint64_t bits() const noexcept { return _bits; }

    bool contains(std::size_t x) const noexcept { return (_bits >> x) & 1U; }
    bool is_empty() const noexcept { return _bits == 0; }
    bool is_full() const noexcept { return *this == full(_ambient); }
    std::size_t size() const noexcept { return std::popcount(_bits); }

    SubsetMask with(std::size_t x) const;
    SubsetMask complement() const;
    bool subset_of(SubsetMask const& other) const;
    bool intersects(SubsetMask const& other) const;

    std::vector<Element> elements() const;

    SubsetMask operator|(SubsetMask const& other) const;
    SubsetMask operator&(SubsetMask const& other) const;
    SubsetMask operator-(SubsetMask const& other) const;

    bool operator==(SubsetMask const&) const = default;
    auto operator<=>(SubsetMask const& other) const {
      return _bits <=> other._bits;
    }

   private:
    std::size_t _ambient = 0;
    std::uint64_t _bits = 0;
  };

  struct Triple {
    Element x, y, z;
    bool operator==(Triple const&) const = default;
  };

  //! Returns the lexicographically least triple (x, y, z) with
  //! (xy)z != x(yz), or nothing if the table is associative. Entries must
  //! already be in range.
  std::optional<Triple> check_associativity(std::size_t n,
                                            std::span<Element const> table);

  //! A finite semigroup given by its Cayley table. Entry (x, y) is x * y
  //! (row element times column element). Immutable once constructed.
  class Semigroup {
   public:
    //! Validates range and associativity. Throws Error(MalformedInput) or a
    //! NotAssociative error carrying the witness triple.
    static Semigroup from_table(std::size_t n,
                                std::vector<Element> table,
                                std::vector<std::string> names = {});

    std::size_t order() const noexcept { return _order; }

    Element product(std::size_t x, std::size_t y) const noexcept {
      return _table[x * _order + y];
    }

    std::span<Element const> table() const noexcept { return _table; }

    bool has_names() const noexcept { return !_names.empty(); }
    std::vector<std::string> const& names() const noexcept { return _names; }
    std::string element_name(std::size_t x) const;

    SubsetMask empty() const { return SubsetMask::empty(_order); }
    SubsetMask full() const { return SubsetMask::full(_order); }

    bool operator==(Semigroup const& other) const {
      return _order == other._order && _table == other._table;
    }

   private:
    Semigroup() = default;

    std::size_t _order = 0;
    std::vector<Element> _table;
    std::vector<std::string> _names;
  };

  class NotAssociativeError : public Error {
   public:
    explicit NotAssociativeError(Triple witness);
    Triple witness() const noexcept { return _witness; }

   private:
    Triple _witness;
  };

  // Text formats

  //! Parses one Cayley table (optional "# names" line, order, n rows).
  Semigroup parse_semigroup(std::string_view text);
  //! Parses a stream holding any number of consecutive tables.
  std::vector<Semigroup> parse_semigroups(std::string_view text);
  std::string format_semigroup(Semigroup const& s);

  //! Parses "{x,y,...}". Names are accepted only when the table declares
  //! them, indices only when it does not.
  SubsetMask parse_subset(Semigroup const& s, std::string_view literal);
  std::string format_subset(Semigroup const& s, SubsetMask const& a);

  // Subset algebra

  SubsetMask multiply_subsets(Semigroup const& s,
                              SubsetMask const& a,
                              SubsetMask const& b);
  SubsetMask power_subset(Semigroup const& s, SubsetMask const& a,
                          std::size_t k);
  //! The empty set is not a subsemigroup.
  bool is_subsemigroup(Semigroup const& s, SubsetMask const& a);
  SubsetMask closure(Semigroup const& s, SubsetMask const& a);
  std::optional<Element> identity_element(Semigroup const& s);

  //! Non-empty subsemigroup with no proper non-empty subsemigroup.
  bool is_minimal_subsemigroup(Semigroup const& s, SubsetMask const& a);

  //! All non-empty subsemigroups in increasing bit order.
  std::vector<SubsetMask> all_subsemigroups(Semigroup const& s);

  //! The subsemigroup `a`, renumbered 0..|a|-1 in increasing element order.
  Semigroup restrict_to(Semigroup const& s, SubsetMask const& a);

  void check_ambient(Semigroup const& s, SubsetMask const& a);
  void check_enumerable(Semigroup const& s);

}  // namespace sepsg

#endif  // SEPSG_SEMIGROUP_HPP_

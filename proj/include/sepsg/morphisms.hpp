#ifndef SEPSG_MORPHISMS_HPP_
#define SEPSG_MORPHISMS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "sepsg/semigroup.hpp"

namespace sepsg {

  //! A total map from the elements of a source semigroup to those of a
  //! target semigroup. Multiplicativity is checked by the constructing
  //! functions, not by this type.
  class HomomorphismMap {
   public:
    HomomorphismMap(std::size_t target_order, std::vector<Element> map);

    std::size_t source_order() const noexcept { return _map.size(); }
    std::size_t target_order() const noexcept { return _target_order; }
    std::vector<Element> const& map() const noexcept { return _map; }
    Element operator()(std::size_t x) const { return _map[x]; }

    bool is_surjective() const;

    bool operator==(HomomorphismMap const&) const = default;
    auto operator<=>(HomomorphismMap const& other) const {
      return _map <=> other._map;
    }

   private:
    std::size_t          _target_order;
    std::vector<Element> _map;
  };

  inline constexpr std::size_t kMaxEndomorphismOrder = 6;

  bool is_homomorphism(Semigroup const& source, Semigroup const& target,
                       std::vector<Element> const& map);

  //! All homomorphisms source -> target in lexicographic order of the map
  //! array, found by backtracking with multiplicativity pruning. With
  //! surjective_only, maps whose image is not all of target are dropped.
  std::vector<HomomorphismMap> enumerate_homomorphisms(
      Semigroup const& source, Semigroup const& target, bool surjective_only);

  //! Throws OrderTooLarge above kMaxEndomorphismOrder.
  std::vector<HomomorphismMap> enumerate_endomorphisms(Semigroup const& s,
                                                       bool surjective_only);

  SubsetMask image(HomomorphismMap const& phi, SubsetMask const& a);
  SubsetMask preimage(HomomorphismMap const& phi, SubsetMask const& b);

  struct Theorem4Witness {
    SubsetMask r1, r2;
    SubsetMask lhs;  // φ(Sep R1)
    SubsetMask rhs;  // Sep R2
  };

  struct Theorem4Result {
    std::size_t                    instances = 0;
    std::optional<Theorem4Witness> witness;
    bool                           pass() const { return !witness; }
  };

  //! For every subsemigroup R2 whose preimage R1 is a subsemigroup, checks
  //! φ(Sep R1) = Sep R2. φ must be a surjective endomorphism of s.
  Theorem4Result check_theorem4(Semigroup const& s, HomomorphismMap const& phi);

  //! A surjective homomorphism φ: A -> B between separator including
  //! subsemigroups with φ(Sep A) ≠ Sep B. The map is stored on the elements
  //! of A in increasing order, as elements of S.
  struct Remark5Witness {
    std::size_t          semigroup_index = 0;
    SubsetMask           a, b;
    std::vector<Element> map;
    SubsetMask           lhs;  // φ(Sep A)
    SubsetMask           rhs;  // Sep B
  };

  enum class Remark5Mode {
    // Sep A and Sep B are taken in S; Sep A ⊆ A because A is separator
    // including.
    Ambient,
    // Sep A and Sep B are taken with A and B as the ambient semigroups.
    Relative,
  };

  struct Remark5Survey {
    std::size_t                 semigroups      = 0;
    std::size_t                 pairs           = 0;  // (A, B) pairs
    std::size_t                 maps            = 0;  // surjective φ: A -> B
    std::size_t                 witnesses_total = 0;
    std::vector<Remark5Witness> witnesses;  // first max_witnesses, in order
    // The second claim: Sep A = φ⁻¹(Sep B) implies φ(SepSepA) = SepSepB.
    std::size_t                 claim2_applicable = 0;
    std::size_t                 claim2_confirmed  = 0;
    std::size_t                 claim2_undefined  = 0;
    std::vector<Remark5Witness> claim2_refutations;  // lhs/rhs are SepSep
  };

  Remark5Survey remark5_survey(std::vector<Semigroup> const& corpus,
                               Remark5Mode                   mode
                               = Remark5Mode::Ambient,
                               std::size_t max_witnesses = 16);

  //! The first witness in corpus order, then A, B by increasing mask and
  //! maps in lexicographic order.
  std::optional<Remark5Witness> search_remark5_witness(
      std::vector<Semigroup> const& corpus,
      Remark5Mode                   mode = Remark5Mode::Ambient);

}  // namespace sepsg

#endif  // SEPSG_MORPHISMS_HPP_

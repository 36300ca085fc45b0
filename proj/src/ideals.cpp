#include "sepsg/ideals.hpp"

namespace sepsg {

  namespace {
    // Superset enumeration walks every subset of S∖M.
    constexpr std::size_t kMaxSupersetBits = 20;

    template <typename Pred>
    bool exists_strict_intermediate(SubsetMask const& lower, Pred&& pred) {
      std::uint64_t const free_bits = lower.complement().bits();
      // Proper non-empty submasks of the complement.
      for (std::uint64_t sub = (free_bits - 1) & free_bits; sub != 0;
           sub               = (sub - 1) & free_bits) {
        if (pred(SubsetMask(lower.ambient(), lower.bits() | sub))) {
          return true;
        }
      }
      return false;
    }

    std::vector<SubsetMask> filter_subsets(Semigroup const& s,
                                           auto&&           pred) {
      check_enumerable(s);
      std::vector<SubsetMask> out;
      std::uint64_t const     top = s.full().bits();
      for (std::uint64_t m = 1; m <= top; ++m) {
        SubsetMask a(s.order(), m);
        if (pred(a)) {
          out.push_back(a);
        }
      }
      return out;
    }
  }  // namespace

  bool is_unitary(Semigroup const& s, SubsetMask const& u) {
    if (!is_subsemigroup(s, u)) {
      raise(ErrorCode::NotASubsemigroup,
            format_subset(s, u) + " is not a subsemigroup");
    }
    std::size_t n = s.order();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!u.contains(s.product(a, b))) {
          continue;
        }
        if (u.contains(a) != u.contains(b)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_ideal(Semigroup const& s, SubsetMask const& r) {
    check_ambient(s, r);
    if (r.is_empty()) {
      raise(ErrorCode::EmptySet, "the empty set is not an ideal");
    }
    return ideal_closure(s, r) == r;
  }

  SubsetMask ideal_closure(Semigroup const& s, SubsetMask const& a) {
    auto const full = s.full();
    auto const sa   = multiply_subsets(s, full, a);
    return a | sa | multiply_subsets(s, a, full)
           | multiply_subsets(s, sa, full);
  }

  bool is_prime_ideal(Semigroup const& s, SubsetMask const& p) {
    check_ambient(s, p);
    if (p.is_empty() || p.is_full() || !is_ideal(s, p)) {
      return false;
    }
    std::size_t n = s.order();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (p.contains(s.product(a, b)) && !p.contains(a) && !p.contains(b)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_maximal_ideal(Semigroup const& s, SubsetMask const& m) {
    check_ambient(s, m);
    if (m.is_empty() || m.is_full() || !is_ideal(s, m)) {
      return false;
    }
    if (m.complement().size() > kMaxSupersetBits) {
      return is_maximal_ideal_by_generation(s, m);
    }
    return !exists_strict_intermediate(
        m, [&](SubsetMask const& a) { return is_ideal(s, a); });
  }

  bool is_maximal_subsemigroup(Semigroup const& s, SubsetMask const& a) {
    if (!is_subsemigroup(s, a)) {
      raise(ErrorCode::NotASubsemigroup,
            format_subset(s, a) + " is not a subsemigroup");
    }
    if (a.is_full()) {
      return false;
    }
    if (a.complement().size() > kMaxSupersetBits) {
      return is_maximal_subsemigroup_by_generation(s, a);
    }
    return !exists_strict_intermediate(
        a, [&](SubsetMask const& b) { return is_subsemigroup(s, b); });
  }

  bool is_maximal_ideal_by_generation(Semigroup const& s,
                                      SubsetMask const& m) {
    check_ambient(s, m);
    if (m.is_empty() || m.is_full() || !is_ideal(s, m)) {
      return false;
    }
    for (auto x : m.complement().elements()) {
      if (!ideal_closure(s, m.with(x)).is_full()) {
        return false;
      }
    }
    return true;
  }

  bool is_maximal_subsemigroup_by_generation(Semigroup const&  s,
                                             SubsetMask const& a) {
    if (!is_subsemigroup(s, a)) {
      raise(ErrorCode::NotASubsemigroup,
            format_subset(s, a) + " is not a subsemigroup");
    }
    if (a.is_full()) {
      return false;
    }
    for (auto x : a.complement().elements()) {
      if (!closure(s, a.with(x)).is_full()) {
        return false;
      }
    }
    return true;
  }

  std::vector<SubsetMask> enumerate_ideals(Semigroup const& s) {
    return filter_subsets(s,
                          [&](SubsetMask const& a) { return is_ideal(s, a); });
  }

  std::vector<SubsetMask> enumerate_prime_ideals(Semigroup const& s) {
    return filter_subsets(
        s, [&](SubsetMask const& a) { return is_prime_ideal(s, a); });
  }

  std::vector<SubsetMask> prime_ideals_via_complement(Semigroup const& s) {
    return filter_subsets(s, [&](SubsetMask const& p) {
      auto const c = p.complement();
      return is_subsemigroup(s, p) && is_subsemigroup(s, c)
             && is_unitary(s, c);
    });
  }

  std::vector<SubsetMask> enumerate_maximal_ideals(Semigroup const& s) {
    return filter_subsets(
        s, [&](SubsetMask const& a) { return is_maximal_ideal(s, a); });
  }

  std::vector<SubsetMask> enumerate_unitary_subsemigroups(Semigroup const& s) {
    return filter_subsets(s, [&](SubsetMask const& a) {
      return is_subsemigroup(s, a) && is_unitary(s, a);
    });
  }

}  // namespace sepsg

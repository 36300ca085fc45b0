#ifndef SEPSG_IDEALS_HPP_
#define SEPSG_IDEALS_HPP_

#include <vector>

#include "sepsg/semigroup.hpp"

namespace sepsg {

  //! A subsemigroup U is unitary if ab ∈ U together with one factor in U
  //! forces the other factor into U. Throws NotASubsemigroup.
  bool is_unitary(Semigroup const& s, SubsetMask const& u);

  //! SR ⊆ R and RS ⊆ R. Throws EmptySet for R = ∅.
  bool is_ideal(Semigroup const& s, SubsetMask const& r);

  //! An ideal P ≠ S such that ab ∈ P implies a ∈ P or b ∈ P. Returns false
  //! for anything that is not an ideal, including ∅.
  bool is_prime_ideal(Semigroup const& s, SubsetMask const& p);

  bool is_maximal_ideal(Semigroup const& s, SubsetMask const& m);

  //! Requires a subsemigroup A ≠ S.
  bool is_maximal_subsemigroup(Semigroup const& s, SubsetMask const& a);

  // Maximality by the generated-superset route: some x ∉ M whose
  // generated ideal (resp. subsemigroup) together with M is still proper.
  // Used for orders too large for superset enumeration; tests check it
  // against the enumerating versions.
  bool is_maximal_ideal_by_generation(Semigroup const& s, SubsetMask const& m);
  bool is_maximal_subsemigroup_by_generation(Semigroup const&  s,
                                             SubsetMask const& a);

  //! The least ideal containing A (A ∪ SA ∪ AS ∪ SAS).
  SubsetMask ideal_closure(Semigroup const& s, SubsetMask const& a);

  // Enumerations, all in increasing bit order.
  std::vector<SubsetMask> enumerate_ideals(Semigroup const& s);
  std::vector<SubsetMask> enumerate_prime_ideals(Semigroup const& s);
  //! Second route: subsemigroups P whose complement is a unitary
  //! subsemigroup.
  std::vector<SubsetMask> prime_ideals_via_complement(Semigroup const& s);
  std::vector<SubsetMask> enumerate_maximal_ideals(Semigroup const& s);
  std::vector<SubsetMask> enumerate_unitary_subsemigroups(Semigroup const& s);

}  // namespace sepsg

#endif  // SEPSG_IDEALS_HPP_

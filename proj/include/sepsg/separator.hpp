#ifndef SEPSG_SEPARATOR_HPP_
#define SEPSG_SEPARATOR_HPP_

#include <string_view>
#include <vector>

#include "sepsg/semigroup.hpp"

namespace sepsg {

  enum class SeparatorKind { EmptySeparator, Including, Excluding };

  std::string_view to_string(SeparatorKind kind);

  //! {x : xA ⊆ A and Ax ⊆ A}. The idealizer of the empty set is S.
  SubsetMask idealizer(Semigroup const& s, SubsetMask const& a);

  //! Id(A) ∩ Id(S∖A): the elements that map both A and its complement into
  //! themselves under left and right multiplication.
  SubsetMask separator(Semigroup const& s, SubsetMask const& a);

  //! Throws InternalTrichotomyViolation if the separator is non-empty and
  //! contained in neither A nor its complement.
  SeparatorKind classify(Semigroup const& s, SubsetMask const& a);

  // Sep A ⊆ A, and Sep A ⊆ S∖A respectively. An empty separator counts as
  // both.
  bool is_separator_including(Semigroup const& s, SubsetMask const& a);
  bool is_separator_excluding(Semigroup const& s, SubsetMask const& a);

  //! Non-empty A with Sep A = A, in increasing bit order.
  std::vector<SubsetMask> separator_fixed_points(Semigroup const& s);

  //! Sep A for every A ⊆ S, indexed by bit pattern. Requires an enumerable
  //! order.
  std::vector<SubsetMask> separator_table(Semigroup const& s);

}  // namespace sepsg

#endif  // SEPSG_SEPARATOR_HPP_

#ifndef SEPSG_CORPUS_HPP_
#define SEPSG_CORPUS_HPP_

#include <string_view>
#include <vector>

#include "sepsg/semigroup.hpp"

namespace sepsg {

  //! Every associative table on n <= 3 elements, found by scanning all
  //! n^(n*n) tables. Sorted by row-major table.
  std::vector<Semigroup> exhaustive_scan(std::size_t n);

  inline constexpr std::size_t kMaxEnumerationOrder = 4;

  //! Same output as exhaustive_scan, built by filling cells in row-major
  //! order and pruning on every associativity triple whose cells are all
  //! known. n <= 4.
  std::vector<Semigroup> enumerate_semigroups(std::size_t n);

  inline constexpr std::size_t kMaxCanonicalOrder = 8;

  //! The least row-major table over all relabellings (and, with
  //! include_anti, over relabellings of the transpose as well).
  std::vector<Element> canonicalize(Semigroup const& s, bool include_anti);

  //! Relabels element x as perm[x].
  Semigroup relabel(Semigroup const& s, std::vector<Element> const& perm);

  Semigroup transpose(Semigroup const& s);

  enum class Dedupe { None, Iso, IsoAnti };

  Dedupe parse_dedupe(std::string_view text);

  //! Keeps the first member of each class, preserving corpus order.
  std::vector<Semigroup> dedupe(std::vector<Semigroup> const& corpus,
                                Dedupe                        mode);

}  // namespace sepsg

#endif  // SEPSG_CORPUS_HPP_

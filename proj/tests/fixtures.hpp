#ifndef SEPSG_TESTS_FIXTURES_HPP_
#define SEPSG_TESTS_FIXTURES_HPP_

#include <vector>

#include "sepsg/corpus.hpp"
#include "sepsg/semigroup.hpp"

namespace fixtures {

  // Zero 0, two orthogonal idempotents a and b, identity 1.
  inline constexpr char const* kExample = R"(# 0 a b 1
4
0 0 0 0
0 a 0 a
0 0 b b
0 a b 1
)";

  inline sepsg::Semigroup example() {
    return sepsg::parse_semigroup(kExample);
  }

  inline sepsg::Semigroup trivial() {
    return sepsg::Semigroup::from_table(1, {0});
  }

  // x·y = x
  inline sepsg::Semigroup left_zero() {
    return sepsg::Semigroup::from_table(2, {0, 0, 1, 1});
  }

  // x·y = y
  inline sepsg::Semigroup right_zero() {
    return sepsg::Semigroup::from_table(2, {0, 1, 0, 1});
  }

  // {0, 1} under min.
  inline sepsg::Semigroup semilattice() {
    return sepsg::Semigroup::from_table(2, {0, 0, 0, 1});
  }

  inline sepsg::SubsetMask subset(sepsg::Semigroup const& s, char const* lit) {
    return sepsg::parse_subset(s, lit);
  }

  // Every labeled semigroup of order 1..3.
  inline std::vector<sepsg::Semigroup> small_corpus() {
    std::vector<sepsg::Semigroup> out;
    for (std::size_t n = 1; n <= 3; ++n) {
      auto part = sepsg::exhaustive_scan(n);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

}  // namespace fixtures

#endif  // SEPSG_TESTS_FIXTURES_HPP_

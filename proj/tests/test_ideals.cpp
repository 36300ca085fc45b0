#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "sepsg/ideals.hpp"
#include "sepsg/separator.hpp"

using namespace sepsg;
using fixtures::subset;

namespace {
  template <typename F>
  ErrorCode code_of(F&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("expected an exception");
    return ErrorCode::Internal;
  }
}  // namespace

TEST_CASE("unitary subsemigroups of the example") {
  auto const s = fixtures::example();
  CHECK(is_unitary(s, subset(s, "{1}")));
  CHECK(is_unitary(s, subset(s, "{a,1}")));
  CHECK_FALSE(is_unitary(s, subset(s, "{0}")));
  CHECK_FALSE(is_unitary(s, subset(s, "{0,a,b}")));
  CHECK(code_of([&] { is_unitary(s, subset(s, "{a,b,1}")); })
        == ErrorCode::NotASubsemigroup);
  CHECK(code_of([&] { is_unitary(s, s.empty()); })
        == ErrorCode::NotASubsemigroup);
  std::vector<SubsetMask> const expected = {subset(s, "{1}"),
                                            subset(s, "{a,1}"),
                                            subset(s, "{b,1}"), s.full()};
  CHECK(enumerate_unitary_subsemigroups(s) == expected);
}

TEST_CASE("ideals of the example") {
  auto const s = fixtures::example();
  CHECK(is_ideal(s, subset(s, "{0,a,b}")));
  CHECK(is_ideal(s, s.full()));
  CHECK_FALSE(is_ideal(s, subset(s, "{1}")));
  CHECK(code_of([&] { is_ideal(s, s.empty()); }) == ErrorCode::EmptySet);
  std::vector<SubsetMask> const ideals = {
      subset(s, "{0}"), subset(s, "{0,a}"), subset(s, "{0,b}"),
      subset(s, "{0,a,b}"), s.full()};
  CHECK(enumerate_ideals(s) == ideals);
}

TEST_CASE("prime and maximal ideals of the example") {
  auto const s = fixtures::example();
  CHECK(is_prime_ideal(s, subset(s, "{0,a,b}")));
  CHECK_FALSE(is_prime_ideal(s, s.full()));
  CHECK_FALSE(is_prime_ideal(s, subset(s, "{0}")));
  CHECK_FALSE(is_prime_ideal(s, s.empty()));
  std::vector<SubsetMask> const primes = {
      subset(s, "{0,a}"), subset(s, "{0,b}"), subset(s, "{0,a,b}")};
  CHECK(enumerate_prime_ideals(s) == primes);
  CHECK(prime_ideals_via_complement(s) == primes);

  CHECK(is_maximal_ideal(s, subset(s, "{0,a,b}")));
  CHECK_FALSE(is_maximal_ideal(s, subset(s, "{0}")));
  CHECK_FALSE(is_maximal_ideal(s, s.full()));
  CHECK(enumerate_maximal_ideals(s)
        == std::vector<SubsetMask>{subset(s, "{0,a,b}")});

  CHECK(is_maximal_subsemigroup(s, subset(s, "{0,a,b}")));
  CHECK_FALSE(is_maximal_subsemigroup(s, subset(s, "{1}")));
  CHECK(code_of([&] { is_maximal_subsemigroup(s, subset(s, "{a,b}")); })
        == ErrorCode::NotASubsemigroup);
}

TEST_CASE("small semigroups") {
  CHECK(enumerate_prime_ideals(fixtures::trivial()).empty());
  auto const m = fixtures::semilattice();
  CHECK(enumerate_prime_ideals(m) == std::vector<SubsetMask>{subset(m, "{0}")});
  for (auto const& s : exhaustive_scan(2)) {
    for (std::size_t x = 0; x < 2; ++x) {
      auto const one = SubsetMask::singleton(2, x);
      if (is_subsemigroup(s, one)) {
        CHECK(is_maximal_subsemigroup(s, one));
      }
    }
  }
}

TEST_CASE("predicates agree with the definition oracles") {
  for (auto const& s : fixtures::small_corpus()) {
    auto const f = oracle::full(s.order());
    std::vector<SubsetMask> ideals, primes, maximal, unitary;
    for (std::uint64_t a = 1; a <= f; ++a) {
      SubsetMask const A(s.order(), a);
      CHECK(is_ideal(s, A) == oracle::ideal(s, a));
      CHECK(is_prime_ideal(s, A) == oracle::prime(s, a));
      CHECK(is_maximal_ideal(s, A) == oracle::maximal_ideal(s, a));
      CHECK(is_maximal_ideal_by_generation(s, A)
            == oracle::maximal_ideal(s, a));
      if (oracle::closed(s, a)) {
        CHECK(is_unitary(s, A) == oracle::unitary(s, a));
        CHECK(is_maximal_subsemigroup(s, A)
              == oracle::maximal_subsemigroup(s, a));
        CHECK(is_maximal_subsemigroup_by_generation(s, A)
              == oracle::maximal_subsemigroup(s, a));
        if (oracle::unitary(s, a)) {
          unitary.push_back(A);
        }
      }
      if (oracle::ideal(s, a)) {
        ideals.push_back(A);
      }
      if (oracle::prime(s, a)) {
        primes.push_back(A);
      }
      if (oracle::maximal_ideal(s, a)) {
        maximal.push_back(A);
      }
    }
    CHECK(enumerate_ideals(s) == ideals);
    CHECK(enumerate_prime_ideals(s) == primes);
    CHECK(prime_ideals_via_complement(s) == primes);
    CHECK(enumerate_maximal_ideals(s) == maximal);
    CHECK(enumerate_unitary_subsemigroups(s) == unitary);
    // Unitary subsemigroups are exactly the separator fixed points.
    CHECK(separator_fixed_points(s) == unitary);
  }
}

TEST_CASE("ideal closure") {
  auto const s = fixtures::example();
  CHECK(ideal_closure(s, subset(s, "{a}")) == subset(s, "{0,a}"));
  CHECK(ideal_closure(s, subset(s, "{1}")) == s.full());
  for (auto const& t : fixtures::small_corpus()) {
    for (std::uint64_t a = 1; a <= oracle::full(t.order()); ++a) {
      auto const c = ideal_closure(t, SubsetMask(t.order(), a));
      CHECK(oracle::ideal(t, c.bits()));
      CHECK((c.bits() & a) == a);
    }
  }
}

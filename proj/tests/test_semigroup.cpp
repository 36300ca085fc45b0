#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "sepsg/semigroup.hpp"

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

TEST_CASE("parse the four-element example") {
  auto const s = fixtures::example();
  CHECK(s.order() == 4);
  CHECK(s.names() == std::vector<std::string>{"0", "a", "b", "1"});
  // row a, column b
  CHECK(s.product(1, 2) == 0);
  CHECK(s.product(1, 3) == 1);
  CHECK(s.product(3, 2) == 2);
  CHECK(format_subset(s, subset(s, "{0,a,b}")) == "{0,a,b}");
  CHECK(format_subset(s, s.empty()) == "{}");
}

TEST_CASE("parse small tables") {
  CHECK(parse_semigroup("1\n0\n").order() == 1);
  auto const lz = parse_semigroup("2\n0 0\n1 1\n");
  CHECK(lz == fixtures::left_zero());
  CHECK_FALSE(lz.has_names());
}

TEST_CASE("malformed tables are rejected") {
  CHECK(code_of([] { parse_semigroup(""); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_semigroup("2\n0 0\n"); })
        == ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_semigroup("2\n0 0 0\n1 1\n"); })
        == ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_semigroup("2\n0 2\n1 1\n"); })
        == ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_semigroup("# x y\n2\nx z\ny y\n"); })
        == ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_semigroup("# x x\n2\nx x\nx x\n"); })
        == ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_semigroup("65\n"); }) == ErrorCode::OrderTooLarge);
}

TEST_CASE("names take precedence and exclude numerals") {
  auto const s = parse_semigroup("# e f\n2\ne f\nf e\n");
  CHECK(subset(s, "{f}").bits() == 2);
  CHECK(code_of([&] { subset(s, "{1}"); }) == ErrorCode::MalformedInput);
  auto const plain = fixtures::left_zero();
  CHECK(subset(plain, "{1}").bits() == 2);
  CHECK(code_of([&] { subset(plain, "{a}"); }) == ErrorCode::MalformedInput);
  CHECK(code_of([&] { subset(plain, "{2}"); }) == ErrorCode::MalformedInput);
  CHECK(code_of([&] { subset(plain, "0,1"); }) == ErrorCode::MalformedInput);
  CHECK(subset(plain, " { 0 , 1 } ").is_full());
}

TEST_CASE("format and parse round trip") {
  auto const s    = fixtures::example();
  auto const back = parse_semigroup(format_semigroup(s));
  CHECK(back == s);
  CHECK(back.names() == s.names());
  auto const many = parse_semigroups(format_semigroup(s) + "\n\n"
                                     + format_semigroup(fixtures::trivial()));
  REQUIRE(many.size() == 2);
  CHECK(many[1] == fixtures::trivial());
}

TEST_CASE("associativity witnesses") {
  CHECK_FALSE(check_associativity(4, fixtures::example().table()));
  std::vector<Element> const bad = {1, 0, 0, 0};
  auto const                 w   = check_associativity(2, bad);
  REQUIRE(w);
  // (0·0)·1 = 1·1 = 0 but 0·(0·1) = 0·0 = 1; (0,0,0) is associative here.
  CHECK(*w == Triple{0, 0, 1});
  CHECK(*w == *oracle::associativity(2, bad));
  std::vector<Element> const meet = {0, 0, 0, 1};
  CHECK_FALSE(check_associativity(2, meet));

  try {
    Semigroup::from_table(2, bad);
    FAIL("accepted a non-associative table");
  } catch (NotAssociativeError const& e) {
    CHECK(e.code() == ErrorCode::NotAssociative);
    CHECK(e.witness() == Triple{0, 0, 1});
  }
}

TEST_CASE("associativity agrees with the oracle on every order-2 table") {
  for (std::uint32_t code = 0; code < 16; ++code) {
    std::vector<Element> t(4);
    for (std::size_t i = 0; i < 4; ++i) {
      t[i] = (code >> i) & 1U;
    }
    CHECK(check_associativity(2, t) == oracle::associativity(2, t));
  }
}

TEST_CASE("subset products and powers") {
  auto const s = fixtures::example();
  CHECK(multiply_subsets(s, subset(s, "{a}"), subset(s, "{b}"))
        == subset(s, "{0}"));
  CHECK(multiply_subsets(s, subset(s, "{a}"), s.empty()).is_empty());
  CHECK(multiply_subsets(s, subset(s, "{a,b,1}"), subset(s, "{a,b,1}"))
        == s.full());
  CHECK(power_subset(s, subset(s, "{a}"), 2) == subset(s, "{a}"));
  CHECK(power_subset(s, subset(s, "{a,b}"), 2) == subset(s, "{0,a,b}"));
  CHECK(power_subset(s, subset(s, "{a,b}"), 1) == subset(s, "{a,b}"));
  CHECK(code_of([&] { power_subset(s, s.full(), 0); })
        == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { multiply_subsets(s, s.full(), SubsetMask::full(3)); })
        == ErrorCode::AmbientMismatch);
}

TEST_CASE("subsemigroups and closure") {
  auto const s = fixtures::example();
  // {a,b,1} is not closed: a·b = 0.
  CHECK_FALSE(is_subsemigroup(s, subset(s, "{a,b,1}")));
  CHECK(is_subsemigroup(s, s.full()));
  CHECK_FALSE(is_subsemigroup(s, subset(s, "{a,b}")));
  CHECK_FALSE(is_subsemigroup(s, s.empty()));
  CHECK(closure(s, subset(s, "{a,b}")) == subset(s, "{0,a,b}"));
  CHECK(closure(s, s.empty()).is_empty());
  CHECK(closure(s, s.full()) == s.full());
}

TEST_CASE("identity elements") {
  CHECK(identity_element(fixtures::example()) == Element{3});
  CHECK_FALSE(identity_element(fixtures::left_zero()));
  CHECK(identity_element(fixtures::trivial()) == Element{0});
}

TEST_CASE("subset algebra laws over the small corpus") {
  std::mt19937_64 rng(7);
  for (auto const& s : fixtures::small_corpus()) {
    auto const f = oracle::full(s.order());
    for (std::uint64_t a = 0; a <= f; ++a) {
      SubsetMask const A(s.order(), a);
      auto const       c = closure(s, A);
      // closure operator: extensive, idempotent, closed
      CHECK(A.subset_of(c));
      CHECK(closure(s, c) == c);
      CHECK(is_subsemigroup(s, c) == (a != 0));
      CHECK(is_subsemigroup(s, A) == oracle::closed(s, a));
      for (std::uint64_t b = 0; b <= f; ++b) {
        SubsetMask const B(s.order(), b);
        CHECK(multiply_subsets(s, A, B).bits() == oracle::product(s, a, b));
        if ((a & b) == a) {
          // monotone
          CHECK(closure(s, A).subset_of(closure(s, B)));
          auto const x = SubsetMask(s.order(), rng() & f);
          CHECK(multiply_subsets(s, A, x).subset_of(multiply_subsets(s, B, x)));
          CHECK(multiply_subsets(s, x, A).subset_of(multiply_subsets(s, x, B)));
        }
      }
    }
  }
}

TEST_CASE("large tables are accepted") {
  // Z_64 under addition.
  std::vector<Element> t(64 * 64);
  for (std::size_t x = 0; x < 64; ++x) {
    for (std::size_t y = 0; y < 64; ++y) {
      t[x * 64 + y] = static_cast<Element>((x + y) % 64);
    }
  }
  auto const s = Semigroup::from_table(64, t);
  CHECK(identity_element(s) == Element{0});
  CHECK(closure(s, SubsetMask::singleton(64, 2)).size() == 32);
  CHECK(s.full().size() == 64);
}

TEST_CASE("restriction renumbers elements") {
  auto const s = fixtures::example();
  auto const r = restrict_to(s, subset(s, "{0,a,1}"));
  CHECK(r.order() == 3);
  CHECK(r.names() == std::vector<std::string>{"0", "a", "1"});
  CHECK(r.product(1, 2) == 1);
  CHECK(code_of([&] { restrict_to(s, subset(s, "{a,b}")); })
        == ErrorCode::NotASubsemigroup);
}

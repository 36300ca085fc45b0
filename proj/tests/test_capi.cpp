#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "sepsg/sepsg.h"

namespace {

  constexpr char const* kExample =
      "# 0 a b 1\n4\n0 0 0 0\n0 a 0 a\n0 0 b b\n0 a b 1\n";

  std::string take(char* p) {
    std::string out = p ? p : "";
    sepsg_free(p);
    return out;
  }

  struct Example {
    sepsg_semigroup* s = nullptr;
    Example() { REQUIRE(sepsg_semigroup_parse(kExample, &s) == SEPSG_OK); }
    ~Example() { sepsg_semigroup_free(s); }

    std::uint64_t subset(char const* lit) const {
      std::uint64_t bits = 0;
      REQUIRE(sepsg_subset_parse(s, lit, &bits) == SEPSG_OK);
      return bits;
    }
    std::string format(std::uint64_t bits) const {
      char* out = nullptr;
      REQUIRE(sepsg_subset_format(s, bits, &out) == SEPSG_OK);
      return take(out);
    }
  };

}  // namespace

TEST_CASE("semigroup handles") {
  Example e;
  CHECK(sepsg_semigroup_order(e.s) == 4);
  CHECK(sepsg_semigroup_product(e.s, 1, 2) == 0);
  char* text = nullptr;
  REQUIRE(sepsg_semigroup_format(e.s, &text) == SEPSG_OK);
  sepsg_semigroup* back = nullptr;
  CHECK(sepsg_semigroup_parse(text, &back) == SEPSG_OK);
  sepsg_free(text);
  CHECK(sepsg_semigroup_order(back) == 4);
  sepsg_semigroup_free(back);

  uint8_t const    lz[] = {0, 0, 1, 1};
  sepsg_semigroup* s    = nullptr;
  REQUIRE(sepsg_semigroup_create(2, lz, &s) == SEPSG_OK);
  uint8_t found = 9;
  int     has   = 1;
  CHECK(sepsg_identity_element(s, &has, &found) == SEPSG_OK);
  CHECK(has == 0);
  sepsg_semigroup_free(s);
}

TEST_CASE("errors carry codes and messages") {
  sepsg_semigroup* s = nullptr;
  CHECK(sepsg_semigroup_parse("2\n0 x\n0 0\n", &s) == SEPSG_E_MALFORMED_INPUT);
  CHECK(s == nullptr);
  CHECK(std::string(sepsg_last_error()).find("x") != std::string::npos);

  uint8_t const bad[] = {1, 0, 0, 0};
  CHECK(sepsg_semigroup_create(2, bad, &s) == SEPSG_E_NOT_ASSOCIATIVE);
  int     ok = 1;
  uint8_t w[3];
  CHECK(sepsg_check_associativity(2, bad, &ok, w) == SEPSG_OK);
  CHECK(ok == 0);
  CHECK(w[0] == 0);
  CHECK(w[1] == 0);
  CHECK(w[2] == 1);
  CHECK(std::string(sepsg_last_error()).empty());

  Example e;
  std::uint64_t out = 0;
  CHECK(sepsg_separator(e.s, 1u << 5, &out) == SEPSG_E_AMBIENT_MISMATCH);
  int flag = 0;
  CHECK(sepsg_is_unitary(e.s, e.subset("{a,b,1}"), &flag)
        == SEPSG_E_NOT_A_SUBSEMIGROUP);
  CHECK(sepsg_is_ideal(e.s, 0, &flag) == SEPSG_E_EMPTY_SET);
  CHECK(sepsg_separator(e.s, 1, nullptr) == SEPSG_E_INVALID_ARGUMENT);
  CHECK(std::string(sepsg_status_name(SEPSG_E_NOT_FREE)) == "not free");
}

TEST_CASE("separators through the C interface") {
  Example       e;
  std::uint64_t out = 0;
  REQUIRE(sepsg_separator(e.s, e.subset("{a}"), &out) == SEPSG_OK);
  CHECK(e.format(out) == "{1}");
  REQUIRE(sepsg_separator(e.s, 0, &out) == SEPSG_OK);
  CHECK(e.format(out) == "{0,a,b,1}");
  REQUIRE(sepsg_idealizer(e.s, e.subset("{a}"), &out) == SEPSG_OK);
  CHECK(e.format(out) == "{a,1}");
  sepsg_separator_kind kind{};
  REQUIRE(sepsg_classify(e.s, e.subset("{a}"), &kind) == SEPSG_OK);
  CHECK(kind == SEPSG_EXCLUDING);

  uint64_t* points = nullptr;
  size_t    count  = 0;
  REQUIRE(sepsg_separator_fixed_points(e.s, &points, &count) == SEPSG_OK);
  REQUIRE(count == 4);
  CHECK(e.format(points[1]) == "{a,1}");
  sepsg_free(points);

  REQUIRE(sepsg_multiply_subsets(e.s, e.subset("{a}"), e.subset("{b}"), &out)
          == SEPSG_OK);
  CHECK(e.format(out) == "{0}");
  REQUIRE(sepsg_power_subset(e.s, e.subset("{a,b}"), 2, &out) == SEPSG_OK);
  CHECK(e.format(out) == "{0,a,b}");
  REQUIRE(sepsg_closure(e.s, e.subset("{a,b}"), &out) == SEPSG_OK);
  CHECK(e.format(out) == "{0,a,b}");
}

TEST_CASE("ideal families") {
  Example   e;
  uint64_t* out   = nullptr;
  size_t    count = 0;
  REQUIRE(sepsg_enumerate_family(e.s, SEPSG_FAMILY_PRIME_IDEALS, &out, &count)
          == SEPSG_OK);
  std::vector<std::string> primes;
  for (size_t i = 0; i < count; ++i) {
    primes.push_back(e.format(out[i]));
  }
  sepsg_free(out);
  CHECK(primes == std::vector<std::string>{"{0,a}", "{0,b}", "{0,a,b}"});
  int flag = 0;
  REQUIRE(sepsg_is_maximal_ideal(e.s, e.subset("{0,a,b}"), &flag) == SEPSG_OK);
  CHECK(flag == 1);
  REQUIRE(sepsg_is_maximal_subsemigroup(e.s, e.subset("{1}"), &flag)
          == SEPSG_OK);
  CHECK(flag == 0);
  CHECK(sepsg_enumerate_family(e.s, static_cast<sepsg_subset_family>(42), &out,
                               &count)
        == SEPSG_E_INVALID_ARGUMENT);
}

TEST_CASE("homomorphisms") {
  Example  e;
  uint8_t* maps  = nullptr;
  size_t   count = 0;
  REQUIRE(sepsg_endomorphisms(e.s, 1, &maps, &count) == SEPSG_OK);
  REQUIRE(count == 2);
  CHECK(std::vector<uint8_t>(maps + 4, maps + 8)
        == std::vector<uint8_t>{0, 2, 1, 3});
  int   pass = 0;
  char* json = nullptr;
  REQUIRE(sepsg_check_theorem4(e.s, maps + 4, &pass, &json) == SEPSG_OK);
  CHECK(pass == 1);
  auto const report = nlohmann::json::parse(take(json));
  CHECK(report["status"] == "pass");
  sepsg_free(maps);

  uint8_t const zero[] = {0, 0, 0, 0};
  CHECK(sepsg_check_theorem4(e.s, zero, &pass, nullptr)
        == SEPSG_E_NOT_SURJECTIVE);
  std::uint64_t out = 0;
  REQUIRE(sepsg_image(e.s, zero, e.subset("{a,b,1}"), &out) == SEPSG_OK);
  CHECK(e.format(out) == "{0}");
  REQUIRE(sepsg_preimage(e.s, zero, e.subset("{0}"), &out) == SEPSG_OK);
  CHECK(e.format(out) == "{0,a,b,1}");
}

TEST_CASE("corpora and verification") {
  sepsg_corpus* c = nullptr;
  REQUIRE(sepsg_corpus_enumerate(3, SEPSG_DEDUPE_NONE, &c) == SEPSG_OK);
  CHECK(sepsg_corpus_size(c) == 113);
  CHECK(sepsg_corpus_get(c, 113) == nullptr);
  CHECK(sepsg_semigroup_order(sepsg_corpus_get(c, 0)) == 3);

  int   all_pass = 0;
  char* json     = nullptr;
  REQUIRE(sepsg_verify(c, "P-T8,P-T9", "order=3", 5, 2, &all_pass, &json)
          == SEPSG_OK);
  CHECK(all_pass == 1);
  auto const reports = nlohmann::json::parse(take(json));
  REQUIRE(reports.size() == 2);
  CHECK(reports[0]["property_id"] == "P-T8");
  CHECK(reports[0]["semigroups"] == 113);
  CHECK(reports[0]["seed"] == 5);
  CHECK(reports[0]["violations"].empty());
  CHECK(sepsg_verify(c, "nope", "", 1, 1, &all_pass, &json)
        == SEPSG_E_UNKNOWN_PROPERTY);

  int found = 0;
  REQUIRE(sepsg_remark5_search(c, 0, &found, &json) == SEPSG_OK);
  auto const r5 = nlohmann::json::parse(take(json));
  CHECK(found == 1);
  CHECK(r5["first_witness"].contains("map"));
  sepsg_corpus_free(c);

  REQUIRE(sepsg_corpus_enumerate(2, SEPSG_DEDUPE_ISO_ANTI, &c) == SEPSG_OK);
  CHECK(sepsg_corpus_size(c) == 4);
  uint8_t* form = nullptr;
  size_t   size = 0;
  REQUIRE(sepsg_canonical_form(sepsg_corpus_get(c, 0), 1, &form, &size)
          == SEPSG_OK);
  CHECK(size == 4);
  sepsg_free(form);
  sepsg_corpus_free(c);

  REQUIRE(sepsg_corpus_scan(2, &c) == SEPSG_OK);
  CHECK(sepsg_corpus_size(c) == 8);
  sepsg_corpus_free(c);
  CHECK(sepsg_corpus_scan(4, &c) == SEPSG_E_ORDER_TOO_LARGE);

  REQUIRE(sepsg_corpus_parse("1\n0\n\n2\n0 0\n0 0\n", &c) == SEPSG_OK);
  CHECK(sepsg_corpus_size(c) == 2);
  sepsg_corpus_free(c);

  REQUIRE(sepsg_property_list(&json) == SEPSG_OK);
  CHECK(nlohmann::json::parse(take(json)).size() >= 19);
}

TEST_CASE("free semigroups") {
  sepsg_gens* g = nullptr;
  REQUIRE(sepsg_gens_parse("ab,ba,aba", 0, &g) == SEPSG_OK);
  CHECK(sepsg_gens_alphabet_size(g) == 2);
  char* count = nullptr;
  char* list  = nullptr;
  REQUIRE(sepsg_factorize(g, "ababa", 8, &count, &list) == SEPSG_OK);
  CHECK(take(count) == "2");
  auto const facts = nlohmann::json::parse(take(list));
  CHECK(facts.size() == 2);

  int   flag = 1;
  char* json = nullptr;
  REQUIRE(sepsg_is_code(g, &flag, &json) == SEPSG_OK);
  CHECK(flag == 0);
  CHECK(nlohmann::json::parse(take(json))["witness"]["word"] == "ababa");
  REQUIRE(sepsg_is_free(g, &flag) == SEPSG_OK);
  CHECK(flag == 0);
  REQUIRE(sepsg_stability_check(g, 5, &flag, &json) == SEPSG_OK);
  CHECK(flag == 0);
  CHECK(nlohmann::json::parse(take(json))["counterexample"]["s"] == "a");
  CHECK(sepsg_check_theorem13(g, 6, &flag, &json) == SEPSG_E_NOT_FREE);
  REQUIRE(sepsg_check_theorem14(g, 1, 5, &flag, &json) == SEPSG_OK);
  CHECK(flag == 1);
  sepsg_free(json);
  sepsg_gens_free(g);

  REQUIRE(sepsg_gens_parse("aa", 2, &g) == SEPSG_OK);
  REQUIRE(sepsg_bounded_separator(g, 4, 6, &json) == SEPSG_OK);
  auto const sep = nlohmann::json::parse(take(json));
  REQUIRE(sep["candidates"].size() == 2);
  CHECK(sep["candidates"][1]["word"] == "aaaa");
  REQUIRE(sepsg_check_theorem13(g, 8, &flag, &json) == SEPSG_OK);
  CHECK(flag == 1);
  sepsg_free(json);
  REQUIRE(sepsg_member(g, "aaaa", &flag) == SEPSG_OK);
  CHECK(flag == 1);
  CHECK(sepsg_member(g, "c", &flag) == SEPSG_E_ALPHABET_MISMATCH);
  sepsg_gens_free(g);

  REQUIRE(sepsg_gens_parse("a,ab,b", 0, &g) == SEPSG_OK);
  sepsg_gens* b = nullptr;
  REQUIRE(sepsg_base(g, &b) == SEPSG_OK);
  REQUIRE(sepsg_gens_format(b, &json) == SEPSG_OK);
  CHECK(take(json) == "{a,b}");
  sepsg_gens_free(b);
  sepsg_gens_free(g);
}

TEST_CASE("last error is per thread") {
  sepsg_semigroup* s = nullptr;
  CHECK(sepsg_semigroup_parse("bogus", &s) != SEPSG_OK);
  std::string other;
  std::thread t([&] { other = sepsg_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(sepsg_last_error()).empty());
}

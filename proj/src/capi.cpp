#include "sepsg/sepsg.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "sepsg/corpus.hpp"
#include "sepsg/freewords.hpp"
#include "sepsg/ideals.hpp"
#include "sepsg/json_io.hpp"
#include "sepsg/morphisms.hpp"
#include "sepsg/registry.hpp"
#include "sepsg/semigroup.hpp"
#include "sepsg/separator.hpp"

struct sepsg_semigroup {
  sepsg::Semigroup value;
};

struct sepsg_corpus {
  std::vector<sepsg_semigroup> items;

  std::vector<sepsg::Semigroup> semigroups() const {
    std::vector<sepsg::Semigroup> out;
    out.reserve(items.size());
    for (auto const& h : items) {
      out.push_back(h.value);
    }
    return out;
  }
};

struct sepsg_gens {
  sepsg::GeneratorSet value;
};

namespace {

  thread_local std::string last_error;

  sepsg_status fail(sepsg_status status, char const* what) {
    last_error = what;
    return status;
  }

  template <typename F>
  sepsg_status guard(F&& f) noexcept {
    try {
      last_error.clear();
      f();
      return SEPSG_OK;
    } catch (sepsg::Error const& e) {
      return fail(static_cast<sepsg_status>(e.code()), e.what());
    } catch (std::bad_alloc const&) {
      return fail(SEPSG_E_INTERNAL, "out of memory");
    } catch (std::exception const& e) {
      return fail(SEPSG_E_INTERNAL, e.what());
    } catch (...) {
      return fail(SEPSG_E_INTERNAL, "unknown error");
    }
  }

  void require(void const* p, char const* name) {
    if (p == nullptr) {
      sepsg::raise(sepsg::ErrorCode::InvalidArgument,
                   std::string(name) + " must not be null");
    }
  }

  char* dup_string(std::string const& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
      throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
  }

  template <typename T>
  T* dup_array(std::vector<T> const& v) {
    auto* out = static_cast<T*>(std::malloc(std::max<std::size_t>(1, v.size())
                                            * sizeof(T)));
    if (out == nullptr) {
      throw std::bad_alloc();
    }
    if (!v.empty()) {
      std::memcpy(out, v.data(), v.size() * sizeof(T));
    }
    return out;
  }

  void put_json(char** out, nlohmann::json const& j) {
    if (out != nullptr) {
      *out = dup_string(j.dump());
    }
  }

  sepsg::SubsetMask mask(sepsg_semigroup const* s, std::uint64_t bits) {
    require(s, "semigroup");
    auto const full = s->value.full().bits();
    if ((bits & ~full) != 0) {
      sepsg::raise(sepsg::ErrorCode::AmbientMismatch,
                   "subset has elements outside a semigroup of order "
                       + std::to_string(s->value.order()));
    }
    return {s->value.order(), bits};
  }

  sepsg::HomomorphismMap endo(sepsg_semigroup const* s, uint8_t const* map) {
    require(s, "semigroup");
    require(map, "map");
    auto const n = s->value.order();
    return sepsg::HomomorphismMap(n, std::vector<sepsg::Element>(map, map + n));
  }

  std::vector<std::uint64_t> bits_of(std::vector<sepsg::SubsetMask> const& v) {
    std::vector<std::uint64_t> out;
    out.reserve(v.size());
    for (auto const& m : v) {
      out.push_back(m.bits());
    }
    return out;
  }

  sepsg::Word word_for(sepsg_gens const* g, char const* word) {
    require(g, "generator set");
    require(word, "word");
    return sepsg::Word::parse(word);
  }

}  // namespace

extern "C" {

const char* sepsg_last_error(void) {
  return last_error.c_str();
}

const char* sepsg_status_name(sepsg_status status) {
  switch (status) {
    case SEPSG_OK:
      return "ok";
    case SEPSG_E_MALFORMED_INPUT:
      return "malformed input";
    case SEPSG_E_NOT_ASSOCIATIVE:
      return "not associative";
    case SEPSG_E_AMBIENT_MISMATCH:
      return "ambient mismatch";
    case SEPSG_E_NOT_A_SUBSEMIGROUP:
      return "not a subsemigroup";
    case SEPSG_E_EMPTY_SET:
      return "empty set";
    case SEPSG_E_ORDER_TOO_LARGE:
      return "order too large";
    case SEPSG_E_NOT_SURJECTIVE:
      return "not surjective";
    case SEPSG_E_ALPHABET_MISMATCH:
      return "alphabet mismatch";
    case SEPSG_E_NOT_FREE:
      return "not free";
    case SEPSG_E_UNKNOWN_PROPERTY:
      return "unknown property id";
    case SEPSG_E_INVALID_ARGUMENT:
      return "invalid argument";
    case SEPSG_E_TRICHOTOMY_VIOLATION:
      return "trichotomy violation";
    case SEPSG_E_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void sepsg_free(void* ptr) {
  std::free(ptr);
}

// Semigroups

sepsg_status sepsg_semigroup_parse(const char* text, sepsg_semigroup** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new sepsg_semigroup{sepsg::parse_semigroup(text)};
  });
}

sepsg_status sepsg_semigroup_create(uint32_t n, const uint8_t* table,
                                    sepsg_semigroup** out) {
  return guard([&] {
    require(table, "table");
    require(out, "out");
    std::vector<sepsg::Element> t(table, table + std::size_t{n} * n);
    *out = new sepsg_semigroup{sepsg::Semigroup::from_table(n, std::move(t))};
  });
}

void sepsg_semigroup_free(sepsg_semigroup* s) {
  delete s;
}

uint32_t sepsg_semigroup_order(const sepsg_semigroup* s) {
  return s == nullptr ? 0 : static_cast<uint32_t>(s->value.order());
}

uint8_t sepsg_semigroup_product(const sepsg_semigroup* s, uint32_t x,
                                uint32_t y) {
  return s->value.product(x, y);
}

sepsg_status sepsg_semigroup_format(const sepsg_semigroup* s, char** out) {
  return guard([&] {
    require(s, "semigroup");
    require(out, "out");
    *out = dup_string(sepsg::format_semigroup(s->value));
  });
}

sepsg_status sepsg_check_associativity(uint32_t n, const uint8_t* table,
                                       int* associative, uint8_t witness[3]) {
  return guard([&] {
    require(table, "table");
    require(associative, "associative");
    std::span<sepsg::Element const> t(table, std::size_t{n} * n);
    for (auto v : t) {
      if (v >= n) {
        sepsg::raise(sepsg::ErrorCode::MalformedInput,
                     "table entry out of range");
      }
    }
    auto w       = sepsg::check_associativity(n, t);
    *associative = w ? 0 : 1;
    if (w && witness != nullptr) {
      witness[0] = w->x;
      witness[1] = w->y;
      witness[2] = w->z;
    }
  });
}

sepsg_status sepsg_subset_parse(const sepsg_semigroup* s, const char* literal,
                                uint64_t* out) {
  return guard([&] {
    require(s, "semigroup");
    require(literal, "literal");
    require(out, "out");
    *out = sepsg::parse_subset(s->value, literal).bits();
  });
}

sepsg_status sepsg_subset_format(const sepsg_semigroup* s, uint64_t subset,
                                 char** out) {
  return guard([&] {
    require(out, "out");
    *out = dup_string(sepsg::format_subset(s->value, mask(s, subset)));
  });
}

sepsg_status sepsg_multiply_subsets(const sepsg_semigroup* s, uint64_t a,
                                    uint64_t b, uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = sepsg::multiply_subsets(s->value, mask(s, a), mask(s, b)).bits();
  });
}

sepsg_status sepsg_power_subset(const sepsg_semigroup* s, uint64_t a,
                                uint32_t k, uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = sepsg::power_subset(s->value, mask(s, a), k).bits();
  });
}

sepsg_status sepsg_is_subsemigroup(const sepsg_semigroup* s, uint64_t a,
                                   int* out) {
  return guard([&] {
    require(out, "out");
    *out = sepsg::is_subsemigroup(s->value, mask(s, a)) ? 1 : 0;
  });
}

sepsg_status sepsg_closure(const sepsg_semigroup* s, uint64_t a,
                           uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = sepsg::closure(s->value, mask(s, a)).bits();
  });
}

sepsg_status sepsg_identity_element(const sepsg_semigroup* s, int* found,
                                    uint8_t* out) {
  return guard([&] {
    require(s, "semigroup");
    require(found, "found");
    auto e = sepsg::identity_element(s->value);
    *found = e ? 1 : 0;
    if (e && out != nullptr) {
      *out = *e;
    }
  });
}

// Separators

sepsg_status sepsg_idealizer(const sepsg_semigroup* s, uint64_t a,
                             uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = sepsg::idealizer(s->value, mask(s, a)).bits();
  });
}

sepsg_status sepsg_separator(const sepsg_semigroup* s, uint64_t a,
                             uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = sepsg::separator(s->value, mask(s, a)).bits();
  });
}

sepsg_status sepsg_classify(const sepsg_semigroup* s, uint64_t a,
                            sepsg_separator_kind* out) {
  return guard([&] {
    require(out, "out");
    switch (sepsg::classify(s->value, mask(s, a))) {
      case sepsg::SeparatorKind::EmptySeparator:
        *out = SEPSG_EMPTY_SEPARATOR;
        break;
      case sepsg::SeparatorKind::Including:
        *out = SEPSG_INCLUDING;
        break;
      case sepsg::SeparatorKind::Excluding:
        *out = SEPSG_EXCLUDING;
        break;
    }
  });
}

sepsg_status sepsg_separator_fixed_points(const sepsg_semigroup* s,
                                          uint64_t** out, size_t* count) {
  return guard([&] {
    require(s, "semigroup");
    require(out, "out");
    require(count, "count");
    auto const v = bits_of(sepsg::separator_fixed_points(s->value));
    *out         = dup_array(v);
    *count       = v.size();
  });
}

// Ideals

sepsg_status sepsg_is_unitary(const sepsg_semigroup* s, uint64_t u, int* out) {
  return guard([&] {
    require(out, "out");
    *out = sepsg::is_unitary(s->value, mask(s, u)) ? 1 : 0;
  });
}

sepsg_status sepsg_is_ideal(const sepsg_semigroup* s, uint64_t r, int* out) {
  return guard([&] {
    require(out, "out");
    *out = sepsg::is_ideal(s->value, mask(s, r)) ? 1 : 0;
  });
}

sepsg_status sepsg_is_prime_ideal(const sepsg_semigroup* s, uint64_t p,
                                  int* out) {
  return guard([&] {
    require(out, "out");
    *out = sepsg::is_prime_ideal(s->value, mask(s, p)) ? 1 : 0;
  });
}

sepsg_status sepsg_is_maximal_ideal(const sepsg_semigroup* s, uint64_t m,
                                    int* out) {
  return guard([&] {
    require(out, "out");
    *out = sepsg::is_maximal_ideal(s->value, mask(s, m)) ? 1 : 0;
  });
}

sepsg_status sepsg_is_maximal_subsemigroup(const sepsg_semigroup* s,
                                           uint64_t a, int* out) {
  return guard([&] {
    require(out, "out");
    *out = sepsg::is_maximal_subsemigroup(s->value, mask(s, a)) ? 1 : 0;
  });
}

sepsg_status sepsg_enumerate_family(const sepsg_semigroup* s,
                                    sepsg_subset_family family,
                                    uint64_t** out, size_t* count) {
  return guard([&] {
    require(s, "semigroup");
    require(out, "out");
    require(count, "count");
    std::vector<sepsg::SubsetMask> v;
    switch (family) {
      case SEPSG_FAMILY_IDEALS:
        v = sepsg::enumerate_ideals(s->value);
        break;
      case SEPSG_FAMILY_PRIME_IDEALS:
        v = sepsg::enumerate_prime_ideals(s->value);
        break;
      case SEPSG_FAMILY_MAXIMAL_IDEALS:
        v = sepsg::enumerate_maximal_ideals(s->value);
        break;
      case SEPSG_FAMILY_UNITARY:
        v = sepsg::enumerate_unitary_subsemigroups(s->value);
        break;
      case SEPSG_FAMILY_SUBSEMIGROUPS:
        v = sepsg::all_subsemigroups(s->value);
        break;
      case SEPSG_FAMILY_PRIME_IDEALS_VIA_COMPLEMENT:
        v = sepsg::prime_ideals_via_complement(s->value);
        break;
      default:
        sepsg::raise(sepsg::ErrorCode::InvalidArgument,
                     "unknown subset family");
    }
    auto const bits = bits_of(v);
    *out            = dup_array(bits);
    *count          = bits.size();
  });
}

// Homomorphisms

sepsg_status sepsg_endomorphisms(const sepsg_semigroup* s, int surjective_only,
                                 uint8_t** maps, size_t* count) {
  return guard([&] {
    require(s, "semigroup");
    require(maps, "maps");
    require(count, "count");
    auto const           homs
        = sepsg::enumerate_endomorphisms(s->value, surjective_only != 0);
    std::vector<uint8_t> flat;
    for (auto const& phi : homs) {
      flat.insert(flat.end(), phi.map().begin(), phi.map().end());
    }
    *maps  = dup_array(flat);
    *count = homs.size();
  });
}

sepsg_status sepsg_image(const sepsg_semigroup* s, const uint8_t* map,
                         uint64_t a, uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = sepsg::image(endo(s, map), mask(s, a)).bits();
  });
}

sepsg_status sepsg_preimage(const sepsg_semigroup* s, const uint8_t* map,
                            uint64_t b, uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = sepsg::preimage(endo(s, map), mask(s, b)).bits();
  });
}

sepsg_status sepsg_check_theorem4(const sepsg_semigroup* s, const uint8_t* map,
                                  int* pass, char** report_json) {
  return guard([&] {
    require(pass, "pass");
    auto const phi = endo(s, map);
    auto const res = sepsg::check_theorem4(s->value, phi);
    *pass          = res.pass() ? 1 : 0;
    put_json(report_json, sepsg::theorem4_json(res, phi));
  });
}

sepsg_status sepsg_remark5_search(const sepsg_corpus* corpus, int relative,
                                  int* found, char** report_json) {
  return guard([&] {
    require(corpus, "corpus");
    require(found, "found");
    auto const sgs  = corpus->semigroups();
    auto const mode = relative != 0 ? sepsg::Remark5Mode::Relative
                                    : sepsg::Remark5Mode::Ambient;
    auto const survey = sepsg::remark5_survey(sgs, mode);
    *found            = survey.witnesses.empty() ? 0 : 1;
    auto j            = sepsg::remark5_survey_json(sgs, survey);
    j["mode"]         = relative != 0 ? "relative" : "ambient";
    j["first_witness"]
        = survey.witnesses.empty()
              ? nlohmann::json(nullptr)
              : sepsg::remark5_witness_json(sgs, survey.witnesses.front());
    put_json(report_json, j);
  });
}

// Corpora

namespace {
  sepsg_corpus* wrap(std::vector<sepsg::Semigroup> sgs) {
    auto* c = new sepsg_corpus;
    c->items.reserve(sgs.size());
    for (auto& s : sgs) {
      c->items.push_back(sepsg_semigroup{std::move(s)});
    }
    return c;
  }
}  // namespace

sepsg_status sepsg_corpus_enumerate(uint32_t order, sepsg_dedupe dedupe,
                                    sepsg_corpus** out) {
  return guard([&] {
    require(out, "out");
    auto mode = sepsg::Dedupe::None;
    if (dedupe == SEPSG_DEDUPE_ISO) {
      mode = sepsg::Dedupe::Iso;
    } else if (dedupe == SEPSG_DEDUPE_ISO_ANTI) {
      mode = sepsg::Dedupe::IsoAnti;
    } else if (dedupe != SEPSG_DEDUPE_NONE) {
      sepsg::raise(sepsg::ErrorCode::InvalidArgument, "unknown dedupe mode");
    }
    *out = wrap(sepsg::dedupe(sepsg::enumerate_semigroups(order), mode));
  });
}

sepsg_status sepsg_corpus_scan(uint32_t order, sepsg_corpus** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(sepsg::exhaustive_scan(order));
  });
}

sepsg_status sepsg_corpus_parse(const char* text, sepsg_corpus** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(sepsg::parse_semigroups(text));
  });
}

void sepsg_corpus_free(sepsg_corpus* c) {
  delete c;
}

size_t sepsg_corpus_size(const sepsg_corpus* c) {
  return c == nullptr ? 0 : c->items.size();
}

const sepsg_semigroup* sepsg_corpus_get(const sepsg_corpus* c, size_t index) {
  if (c == nullptr || index >= c->items.size()) {
    return nullptr;
  }
  return &c->items[index];
}

sepsg_status sepsg_canonical_form(const sepsg_semigroup* s, int include_anti,
                                  uint8_t** table, size_t* size) {
  return guard([&] {
    require(s, "semigroup");
    require(table, "table");
    require(size, "size");
    auto const v = sepsg::canonicalize(s->value, include_anti != 0);
    *table       = dup_array(v);
    *size        = v.size();
  });
}

sepsg_status sepsg_verify(const sepsg_corpus* c, const char* props,
                          const char* corpus_spec, uint64_t seed,
                          uint32_t jobs, int* all_pass, char** report_json) {
  return guard([&] {
    require(c, "corpus");
    require(all_pass, "all_pass");
    auto const ids = sepsg::parse_property_selection(props ? props : "");
    sepsg::RegistryOptions opts;
    opts.seed          = seed;
    opts.jobs          = jobs;
    auto const reports = sepsg::run_registry(
        c->semigroups(), ids, corpus_spec ? corpus_spec : "", opts);
    nlohmann::json arr = nlohmann::json::array();
    bool           ok  = true;
    for (auto const& r : reports) {
      ok = ok && r.pass();
      arr.push_back(sepsg::report_json(r));
    }
    *all_pass = ok ? 1 : 0;
    put_json(report_json, arr);
  });
}

sepsg_status sepsg_property_list(char** out_json) {
  return guard([&] {
    require(out_json, "out_json");
    nlohmann::json arr = nlohmann::json::array();
    for (auto const& p : sepsg::property_registry()) {
      arr.push_back({{"id", p.id},
                     {"summary", p.summary},
                     {"existence", p.existence}});
    }
    put_json(out_json, arr);
  });
}

// Free semigroups

sepsg_status sepsg_gens_parse(const char* list, uint32_t alphabet_size,
                              sepsg_gens** out) {
  return guard([&] {
    require(list, "list");
    require(out, "out");
    *out = new sepsg_gens{sepsg::GeneratorSet::parse(list, alphabet_size)};
  });
}

void sepsg_gens_free(sepsg_gens* g) {
  delete g;
}

uint32_t sepsg_gens_alphabet_size(const sepsg_gens* g) {
  return g == nullptr ? 0 : static_cast<uint32_t>(g->value.alphabet_size());
}

sepsg_status sepsg_gens_format(const sepsg_gens* g, char** out) {
  return guard([&] {
    require(g, "generator set");
    require(out, "out");
    *out = dup_string(g->value.str());
  });
}

sepsg_status sepsg_factorize(const sepsg_gens* g, const char* word,
                             size_t limit, char** count,
                             char** factorizations_json) {
  return guard([&] {
    auto const w = word_for(g, word);
    auto const n = sepsg::count_factorizations(w, g->value);
    if (count != nullptr) {
      *count = dup_string(n.str());
    }
    if (factorizations_json != nullptr) {
      nlohmann::json arr = nlohmann::json::array();
      for (auto const& f : sepsg::list_factorizations(w, g->value, limit)) {
        nlohmann::json parts = nlohmann::json::array();
        for (auto i : f) {
          parts.push_back(g->value.words()[i].str());
        }
        arr.push_back(std::move(parts));
      }
      *factorizations_json = dup_string(arr.dump());
    }
  });
}

sepsg_status sepsg_member(const sepsg_gens* g, const char* word, int* out) {
  return guard([&] {
    require(out, "out");
    *out = sepsg::member(word_for(g, word), g->value) ? 1 : 0;
  });
}

sepsg_status sepsg_base(const sepsg_gens* g, sepsg_gens** out) {
  return guard([&] {
    require(g, "generator set");
    require(out, "out");
    *out = new sepsg_gens{sepsg::base(g->value)};
  });
}

sepsg_status sepsg_is_code(const sepsg_gens* g, int* out, char** report_json) {
  return guard([&] {
    require(g, "generator set");
    require(out, "out");
    auto const r = sepsg::is_code(g->value);
    *out         = r.is_code ? 1 : 0;
    put_json(report_json, sepsg::code_json(g->value, r));
  });
}

sepsg_status sepsg_is_free(const sepsg_gens* g, int* out) {
  return guard([&] {
    require(g, "generator set");
    require(out, "out");
    *out = sepsg::is_free_subsemigroup(g->value) ? 1 : 0;
  });
}

sepsg_status sepsg_bounded_separator(const sepsg_gens* g,
                                     uint32_t length_bound, uint32_t depth,
                                     char** report_json) {
  return guard([&] {
    require(g, "generator set");
    require(report_json, "report_json");
    put_json(report_json,
             sepsg::bounded_separator_json(
                 sepsg::bounded_separator(g->value, length_bound, depth)));
  });
}

sepsg_status sepsg_stability_check(const sepsg_gens* g, uint32_t bound,
                                   int* pass, char** report_json) {
  return guard([&] {
    require(g, "generator set");
    require(pass, "pass");
    auto const r = sepsg::bounded_stability_check(g->value, bound);
    *pass        = r.pass() ? 1 : 0;
    put_json(report_json, sepsg::stability_json(r));
  });
}

sepsg_status sepsg_check_theorem13(const sepsg_gens* g, uint32_t bound,
                                   int* pass, char** report_json) {
  return guard([&] {
    require(g, "generator set");
    require(pass, "pass");
    auto const r = sepsg::check_theorem13_condition(g->value, bound);
    *pass        = r.pass() ? 1 : 0;
    put_json(report_json, sepsg::theorem13_json(r));
  });
}

sepsg_status sepsg_check_theorem14(const sepsg_gens* g, uint32_t power,
                                   uint32_t bound, int* consistent,
                                   char** report_json) {
  return guard([&] {
    require(g, "generator set");
    require(consistent, "consistent");
    auto const r = sepsg::check_theorem14(g->value, power, bound);
    *consistent  = r.consistent() ? 1 : 0;
    put_json(report_json, sepsg::theorem14_json(r));
  });
}

}  // extern "C"

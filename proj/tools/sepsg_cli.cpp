// sepsg: command-line front end over the C interface.
//
// Exit status: 0 on success or pass, 1 when a check finds a violation or a
// refutation, 2 on usage or input errors.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sepsg/sepsg.h"

using nlohmann::json;

namespace {

  constexpr int kExitViolation = 1;
  constexpr int kExitInput     = 2;

  struct Failure {
    int         code;
    std::string message;
  };

  void check(sepsg_status st) {
    if (st != SEPSG_OK) {
      throw Failure{kExitInput, std::string(sepsg_status_name(st)) + ": "
                                    + sepsg_last_error()};
    }
  }

  struct FreeDeleter {
    void operator()(void* p) const { sepsg_free(p); }
  };
  struct SemigroupDeleter {
    void operator()(sepsg_semigroup* s) const { sepsg_semigroup_free(s); }
  };
  struct CorpusDeleter {
    void operator()(sepsg_corpus* c) const { sepsg_corpus_free(c); }
  };
  struct GensDeleter {
    void operator()(sepsg_gens* g) const { sepsg_gens_free(g); }
  };

  using SemigroupPtr = std::unique_ptr<sepsg_semigroup, SemigroupDeleter>;
  using CorpusPtr    = std::unique_ptr<sepsg_corpus, CorpusDeleter>;
  using GensPtr      = std::unique_ptr<sepsg_gens, GensDeleter>;

  // Takes ownership of a malloc'd string from the library.
  std::string take(char* p) {
    std::unique_ptr<char, FreeDeleter> guard(p);
    return p ? std::string(p) : std::string();
  }

  json take_json(char* p) {
    return json::parse(take(p));
  }

  template <typename T>
  std::vector<T> take_array(T* p, std::size_t n) {
    std::unique_ptr<T, FreeDeleter> guard(p);
    return std::vector<T>(p, p + n);
  }

  std::string read_input(std::string const& path) {
    if (path == "-") {
      return {std::istreambuf_iterator<char>(std::cin), {}};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Failure{kExitInput, "cannot open " + path};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  SemigroupPtr load_semigroup(std::string const& path) {
    auto const      text = read_input(path);
    sepsg_semigroup* s   = nullptr;
    check(sepsg_semigroup_parse(text.c_str(), &s));
    return SemigroupPtr(s);
  }

  std::uint64_t parse_subset(sepsg_semigroup const* s, std::string const& lit) {
    std::uint64_t bits = 0;
    check(sepsg_subset_parse(s, lit.c_str(), &bits));
    return bits;
  }

  std::string format_subset(sepsg_semigroup const* s, std::uint64_t bits) {
    char* out = nullptr;
    check(sepsg_subset_format(s, bits, &out));
    return take(out);
  }

  json subset_indices(std::uint64_t bits) {
    json out = json::array();
    for (unsigned x = 0; x < 64; ++x) {
      if ((bits >> x) & 1U) {
        out.push_back(x);
      }
    }
    return out;
  }

  json subset_row(sepsg_semigroup const* s, std::uint64_t bits) {
    return {{"subset", format_subset(s, bits)},
            {"elements", subset_indices(bits)}};
  }

  std::string element_name(sepsg_semigroup const* s, unsigned x) {
    auto const f = format_subset(s, std::uint64_t{1} << x);
    return f.substr(1, f.size() - 2);
  }

  std::string format_map(sepsg_semigroup const* s,
                         std::vector<std::uint8_t> const& map) {
    std::string out = "[";
    for (std::size_t i = 0; i < map.size(); ++i) {
      out += (i ? "," : "") + element_name(s, map[i]);
    }
    return out + "]";
  }

  // "0,b,a,1" or "0 2 1 3": one image per element, in element order.
  std::vector<std::uint8_t> parse_map(sepsg_semigroup const* s,
                                      std::string const&     text) {
    std::vector<std::uint8_t> map;
    std::string               token;
    auto flush = [&] {
      if (token.empty()) {
        return;
      }
      auto const bits = parse_subset(s, "{" + token + "}");
      map.push_back(static_cast<std::uint8_t>(__builtin_ctzll(bits)));
      token.clear();
    };
    for (char c : text) {
      if (c == ',' || c == ' ' || c == '\t' || c == '[' || c == ']') {
        flush();
      } else {
        token += c;
      }
    }
    flush();
    if (map.size() != sepsg_semigroup_order(s)) {
      throw Failure{kExitInput, "map must list one image per element"};
    }
    return map;
  }

  std::string compact(json const& subset) {
    std::string out = "{";
    bool        first = true;
    for (auto const& x : subset) {
      out += (first ? "" : ",") + x.dump();
      first = false;
    }
    return out + "}";
  }

  std::string yes_no(bool b) {
    return b ? "yes" : "no";
  }

  // Corpus selection shared by verify and hom remark5-search.
  struct CorpusArgs {
    unsigned    order     = 0;
    unsigned    max_order = 0;
    std::string table;
  };

  void add_corpus_options(CLI::App* cmd, CorpusArgs& args) {
    auto* o = cmd->add_option("--order", args.order,
                              "All labeled semigroups of this order (1-4)");
    auto* m = cmd->add_option("--max-order", args.max_order,
                              "All labeled semigroups of orders 1..n");
    auto* t = cmd->add_option("--table", args.table,
                              "File of one or more Cayley tables");
    o->excludes(m)->excludes(t);
    m->excludes(t);
  }

  struct Corpus {
    CorpusPtr   handle;
    std::string spec;
  };

  CorpusPtr enumerate(unsigned order) {
    sepsg_corpus* c = nullptr;
    check(sepsg_corpus_enumerate(order, SEPSG_DEDUPE_NONE, &c));
    return CorpusPtr(c);
  }

  Corpus load_corpus(CorpusArgs const& args) {
    if (!args.table.empty()) {
      auto const    text = read_input(args.table);
      sepsg_corpus* c    = nullptr;
      check(sepsg_corpus_parse(text.c_str(), &c));
      return {CorpusPtr(c), "table=" + args.table};
    }
    if (args.order != 0) {
      return {enumerate(args.order), "order=" + std::to_string(args.order)};
    }
    if (args.max_order != 0) {
      // Concatenate orders 1..n through the text format.
      std::string text;
      for (unsigned n = 1; n <= args.max_order; ++n) {
        auto part = enumerate(n);
        for (std::size_t i = 0; i < sepsg_corpus_size(part.get()); ++i) {
          char* t = nullptr;
          check(sepsg_semigroup_format(sepsg_corpus_get(part.get(), i), &t));
          text += take(t) + "\n";
        }
      }
      sepsg_corpus* c = nullptr;
      check(sepsg_corpus_parse(text.c_str(), &c));
      return {CorpusPtr(c), "order<=" + std::to_string(args.max_order)};
    }
    throw Failure{kExitInput, "one of --order, --max-order, --table is required"};
  }

  // ---- semigroup commands ----------------------------------------------

  int run_validate(std::string const& path, bool as_json) {
    auto const    text = read_input(path);
    sepsg_corpus* c    = nullptr;
    auto const    st   = sepsg_corpus_parse(text.c_str(), &c);
    if (st == SEPSG_E_NOT_ASSOCIATIVE) {
      std::string const msg = sepsg_last_error();
      if (as_json) {
        std::cout << json{{"valid", false}, {"error", msg}}.dump(2) << "\n";
      } else {
        std::cout << "invalid: " << msg << "\n";
      }
      return kExitViolation;
    }
    check(st);
    CorpusPtr  corpus(c);
    auto const count = sepsg_corpus_size(c);
    if (as_json) {
      json orders = json::array();
      for (std::size_t i = 0; i < count; ++i) {
        orders.push_back(sepsg_semigroup_order(sepsg_corpus_get(c, i)));
      }
      std::cout << json{{"valid", true}, {"tables", count}, {"orders", orders}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "valid: " << count << (count == 1 ? " table" : " tables")
                << "\n";
    }
    return 0;
  }

  int run_subset_op(std::string const& op, std::string const& path,
                    std::string const& literal, bool as_json) {
    auto const s = load_semigroup(path);
    auto const a = parse_subset(s.get(), literal);
    if (op == "classify") {
      sepsg_separator_kind kind{};
      check(sepsg_classify(s.get(), a, &kind));
      std::string const name = kind == SEPSG_INCLUDING   ? "including"
                               : kind == SEPSG_EXCLUDING ? "excluding"
                                                         : "empty-separator";
      std::uint64_t sep = 0;
      check(sepsg_separator(s.get(), a, &sep));
      if (as_json) {
        std::cout << json{{"subset", format_subset(s.get(), a)},
                          {"separator", subset_row(s.get(), sep)},
                          {"kind", name}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << name << "\n";
      }
      return 0;
    }
    std::uint64_t out = 0;
    check(op == "sep" ? sepsg_separator(s.get(), a, &out)
                      : sepsg_idealizer(s.get(), a, &out));
    if (as_json) {
      json j         = subset_row(s.get(), out);
      j["operation"] = op == "sep" ? "separator" : "idealizer";
      j["of"]        = format_subset(s.get(), a);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << format_subset(s.get(), out) << "\n";
    }
    return 0;
  }

  std::vector<std::uint64_t> family(sepsg_semigroup const* s,
                                    sepsg_subset_family  f) {
    std::uint64_t* out   = nullptr;
    std::size_t    count = 0;
    check(sepsg_enumerate_family(s, f, &out, &count));
    return take_array(out, count);
  }

  void print_rows(std::vector<json> const& rows, bool as_json) {
    if (as_json) {
      std::cout << json(rows).dump(2) << "\n";
      return;
    }
    for (auto const& r : rows) {
      std::cout << r["subset"].get<std::string>() << "\n";
    }
  }

  int run_fixed_points(std::string const& path, bool as_json) {
    auto const     s     = load_semigroup(path);
    std::uint64_t* out   = nullptr;
    std::size_t    count = 0;
    check(sepsg_separator_fixed_points(s.get(), &out, &count));
    std::vector<json> rows;
    for (auto bits : take_array(out, count)) {
      rows.push_back(subset_row(s.get(), bits));
    }
    print_rows(rows, as_json);
    return 0;
  }

  json ideal_flags(sepsg_semigroup const* s, std::uint64_t bits) {
    int ideal = 0, prime = 0, maximal = 0;
    check(sepsg_is_ideal(s, bits, &ideal));
    check(sepsg_is_prime_ideal(s, bits, &prime));
    check(sepsg_is_maximal_ideal(s, bits, &maximal));
    return {{"ideal", ideal != 0},
            {"prime", prime != 0},
            {"maximal", maximal != 0}};
  }

  int run_ideals(std::string const& which, std::string const& path,
                 std::string const& literal, bool as_json) {
    auto const s = load_semigroup(path);
    if (which == "check") {
      auto const bits  = parse_subset(s.get(), literal);
      auto const flags = ideal_flags(s.get(), bits);
      if (as_json) {
        json row     = subset_row(s.get(), bits);
        row["flags"] = flags;
        std::cout << row.dump(2) << "\n";
      } else {
        for (auto const& [k, v] : flags.items()) {
          std::cout << k << ": " << yes_no(v.get<bool>()) << "\n";
        }
      }
      return 0;
    }
    auto const f = which == "prime"     ? SEPSG_FAMILY_PRIME_IDEALS
                   : which == "maximal" ? SEPSG_FAMILY_MAXIMAL_IDEALS
                                        : SEPSG_FAMILY_IDEALS;
    std::vector<json> rows;
    for (auto bits : family(s.get(), f)) {
      json row     = subset_row(s.get(), bits);
      row["flags"] = ideal_flags(s.get(), bits);
      rows.push_back(std::move(row));
    }
    print_rows(rows, as_json);
    return 0;
  }

  int run_unitary(std::string const& path, std::string const& literal,
                  bool as_json) {
    auto const s    = load_semigroup(path);
    auto const full = sepsg_semigroup_order(s.get()) == 64
                          ? ~std::uint64_t{0}
                          : (std::uint64_t{1} << sepsg_semigroup_order(s.get()))
                                - 1;
    auto flags = [&](std::uint64_t bits) {
      int unitary = 0, prime = 0;
      check(sepsg_is_unitary(s.get(), bits, &unitary));
      auto const comp = full & ~bits;
      if (comp != 0) {
        check(sepsg_is_prime_ideal(s.get(), comp, &prime));
      }
      return json{{"unitary", unitary != 0},
                  {"complement_prime_ideal", prime != 0}};
    };
    if (!literal.empty()) {
      auto const bits = parse_subset(s.get(), literal);
      auto const f    = flags(bits);
      if (as_json) {
        json row     = subset_row(s.get(), bits);
        row["flags"] = f;
        std::cout << row.dump(2) << "\n";
      } else {
        std::cout << (f["unitary"].get<bool>() ? "unitary" : "not unitary")
                  << "\n";
      }
      return 0;
    }
    std::vector<json> rows;
    for (auto bits : family(s.get(), SEPSG_FAMILY_UNITARY)) {
      json row     = subset_row(s.get(), bits);
      row["flags"] = flags(bits);
      rows.push_back(std::move(row));
    }
    print_rows(rows, as_json);
    return 0;
  }

  // ---- homomorphisms ---------------------------------------------------

  std::vector<std::vector<std::uint8_t>> endomorphisms(sepsg_semigroup const* s,
                                                       bool surjective) {
    std::uint8_t* maps  = nullptr;
    std::size_t   count = 0;
    check(sepsg_endomorphisms(s, surjective ? 1 : 0, &maps, &count));
    auto const n    = sepsg_semigroup_order(s);
    auto const flat = take_array(maps, count * n);
    std::vector<std::vector<std::uint8_t>> out;
    for (std::size_t i = 0; i < count; ++i) {
      out.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(i * n),
                       flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
    }
    return out;
  }

  int run_hom_list(std::string const& path, bool surjective, bool as_json) {
    auto const s    = load_semigroup(path);
    auto const maps = endomorphisms(s.get(), surjective);
    if (as_json) {
      std::cout << json{{"surjective_only", surjective},
                        {"count", maps.size()},
                        {"maps", maps}}
                       .dump(2)
                << "\n";
    } else {
      for (auto const& m : maps) {
        std::cout << format_map(s.get(), m) << "\n";
      }
    }
    return 0;
  }

  int run_hom_th4(std::string const& path, std::string const& map_text,
                  bool as_json) {
    auto const s = load_semigroup(path);
    std::vector<std::vector<std::uint8_t>> maps;
    if (map_text.empty()) {
      maps = endomorphisms(s.get(), true);
    } else {
      maps.push_back(parse_map(s.get(), map_text));
    }
    json reports = json::array();
    bool ok      = true;
    for (auto const& m : maps) {
      int   pass = 0;
      char* out  = nullptr;
      check(sepsg_check_theorem4(s.get(), m.data(), &pass, &out));
      auto r = take_json(out);
      ok     = ok && pass != 0;
      if (!as_json) {
        std::cout << format_map(s.get(), m) << "  "
                  << r["status"].get<std::string>()
                  << "  instances=" << r["instances"].get<std::size_t>();
        if (r.contains("witness")) {
          auto const& w = r["witness"];
          std::cout << "  R1=" << compact(w["R1"]) << " R2=" << compact(w["R2"])
                    << " phi(Sep R1)=" << compact(w["lhs"])
                    << " Sep R2=" << compact(w["rhs"]);
        }
        std::cout << "\n";
      }
      reports.push_back(std::move(r));
    }
    if (as_json) {
      std::cout << json{{"status", ok ? "pass" : "fail"}, {"maps", reports}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "result: " << (ok ? "pass" : "fail") << " (" << maps.size()
                << (maps.size() == 1 ? " map" : " maps") << ")\n";
    }
    return ok ? 0 : kExitViolation;
  }

  void print_remark5_record(json const& w) {
    std::cout << "  semigroup #" << w["semigroup"]["index"].get<std::size_t>()
              << " (order " << w["semigroup"]["order"].get<unsigned>()
              << ") table=" << w["semigroup"]["table"].dump()
              << " A=" << compact(w["A"]) << " B=" << compact(w["B"])
              << " map=" << w["map"].dump()
              << " phi(Sep A)=" << compact(w["lhs"])
              << " Sep B=" << compact(w["rhs"]) << "\n";
  }

  int run_remark5(CorpusArgs const& args, bool relative, bool as_json) {
    auto const corpus = load_corpus(args);
    int        found  = 0;
    char*      out    = nullptr;
    check(sepsg_remark5_search(corpus.handle.get(), relative ? 1 : 0, &found,
                               &out));
    auto r           = take_json(out);
    r["corpus_spec"] = corpus.spec;
    if (as_json) {
      std::cout << r.dump(2) << "\n";
      return 0;
    }
    std::cout << "corpus: " << corpus.spec << " ("
              << r["semigroups"].get<std::size_t>() << " semigroups)\n"
              << "mode: " << r["mode"].get<std::string>() << "\n"
              << "subsemigroup pairs: " << r["pairs"].get<std::size_t>() << "\n"
              << "surjective maps: " << r["maps"].get<std::size_t>() << "\n"
              << "witnesses: " << r["witnesses_total"].get<std::size_t>()
              << "\n";
    if (found != 0) {
      std::cout << "first witness:\n";
      print_remark5_record(r["first_witness"]);
    } else {
      std::cout << "no witness exists in this corpus\n";
    }
    if (!relative) {
      auto const& c = r["claim2"];
      std::cout << "claim 2: applicable=" << c["applicable"].get<std::size_t>()
                << " confirmed=" << c["confirmed"].get<std::size_t>()
                << " undefined=" << c["undefined"].get<std::size_t>()
                << " refuted=" << c["refuted"].get<std::size_t>() << "\n";
      for (auto const& w : c["refutations"]) {
        print_remark5_record(w);
      }
    }
    return 0;
  }

  // ---- corpus ----------------------------------------------------------

  int run_enumerate(unsigned order, std::string const& dedupe, bool count_only,
                    bool as_json) {
    auto const mode = dedupe == "iso"        ? SEPSG_DEDUPE_ISO
                      : dedupe == "iso-anti" ? SEPSG_DEDUPE_ISO_ANTI
                                             : SEPSG_DEDUPE_NONE;
    sepsg_corpus* raw = nullptr;
    check(sepsg_corpus_enumerate(order, mode, &raw));
    CorpusPtr  c(raw);
    auto const count = sepsg_corpus_size(raw);
    if (count_only) {
      if (as_json) {
        std::cout << json{{"order", order}, {"dedupe", dedupe}, {"count", count}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << count << "\n";
      }
      return 0;
    }
    if (as_json) {
      json tables = json::array();
      for (std::size_t i = 0; i < count; ++i) {
        auto const* s = sepsg_corpus_get(raw, i);
        json        rows = json::array();
        for (unsigned x = 0; x < order; ++x) {
          json row = json::array();
          for (unsigned y = 0; y < order; ++y) {
            row.push_back(sepsg_semigroup_product(s, x, y));
          }
          rows.push_back(std::move(row));
        }
        tables.push_back(std::move(rows));
      }
      std::cout << json{{"order", order},
                        {"dedupe", dedupe},
                        {"count", count},
                        {"tables", tables}}
                       .dump(2)
                << "\n";
      return 0;
    }
    for (std::size_t i = 0; i < count; ++i) {
      char* t = nullptr;
      check(sepsg_semigroup_format(sepsg_corpus_get(raw, i), &t));
      if (i != 0) {
        std::cout << "\n";
      }
      std::cout << take(t);
    }
    return 0;
  }

  struct VerifyArgs {
    CorpusArgs    corpus;
    std::string   props;
    std::string   json_out;
    std::uint64_t seed = 20241019;
    unsigned      jobs = 0;
  };

  int run_verify(VerifyArgs const& args) {
    auto const corpus   = load_corpus(args.corpus);
    int        all_pass = 0;
    char*      out      = nullptr;
    auto const spec = corpus.spec + ";seed=" + std::to_string(args.seed);
    check(sepsg_verify(corpus.handle.get(), args.props.c_str(), spec.c_str(),
                       args.seed, args.jobs, &all_pass, &out));
    auto const reports = take_json(out);
    json const doc     = {{"corpus_spec", spec},
                          {"seed", args.seed},
                          {"semigroups", sepsg_corpus_size(corpus.handle.get())},
                          {"status", all_pass ? "pass" : "fail"},
                          {"reports", reports}};
    if (args.json_out == "-") {
      std::cout << doc.dump(2) << "\n";
      return all_pass ? 0 : kExitViolation;
    }
    if (!args.json_out.empty()) {
      std::ofstream f(args.json_out);
      if (!f) {
        throw Failure{kExitInput, "cannot write " + args.json_out};
      }
      f << doc.dump(2) << "\n";
    }
    std::cout << "corpus: " << corpus.spec << " ("
              << sepsg_corpus_size(corpus.handle.get()) << " semigroups)\n"
              << "seed: " << args.seed << "\n";
    for (auto const& r : reports) {
      std::string id = r["property_id"].get<std::string>();
      id.resize(std::max<std::size_t>(id.size(), 9), ' ');
      std::cout << id << " " << r["status"].get<std::string>()
                << "  semigroups=" << r["semigroups"].get<std::size_t>()
                << " instances=" << r["instances_checked"].get<std::size_t>()
                << " nonvacuous=" << r["nonvacuous"].get<std::size_t>()
                << " violations=" << r["violation_count"].get<std::size_t>();
      if (!r["examples_found"].empty()) {
        std::cout << " examples=" << r["examples_found"].size();
      }
      std::cout << "\n";
      for (auto const& w : r["violations"]) {
        std::cout << "  violation: " << w.dump() << "\n";
      }
    }
    std::cout << "result: " << (all_pass ? "pass" : "fail") << "\n";
    return all_pass ? 0 : kExitViolation;
  }

  int run_props() {
    char* out = nullptr;
    check(sepsg_property_list(&out));
    for (auto const& p : take_json(out)) {
      std::string id = p["id"].get<std::string>();
      id.resize(std::max<std::size_t>(id.size(), 9), ' ');
      std::cout << id << " " << p["summary"].get<std::string>()
                << (p["existence"].get<bool>() ? " (existence probe)" : "")
                << "\n";
    }
    return 0;
  }

  // ---- free semigroups -------------------------------------------------

  struct FreeArgs {
    std::string gens;
    unsigned    alphabet = 0;
    std::string word;
    std::size_t limit    = 16;
    unsigned    bound    = 8;
    unsigned    max_len  = 4;
    unsigned    depth    = 6;
    unsigned    power    = 1;
  };

  GensPtr load_gens(FreeArgs const& a) {
    sepsg_gens* g = nullptr;
    check(sepsg_gens_parse(a.gens.c_str(), a.alphabet, &g));
    return GensPtr(g);
  }

  std::string gens_str(sepsg_gens const* g) {
    char* out = nullptr;
    check(sepsg_gens_format(g, &out));
    return take(out);
  }

  std::string join_factors(json const& parts) {
    std::string out;
    for (auto const& p : parts) {
      out += (out.empty() ? "" : ".") + p.get<std::string>();
    }
    return out;
  }

  int run_free(std::string const& cmd, FreeArgs const& a, bool as_json) {
    auto const g = load_gens(a);
    auto emit    = [&](json const& j) { std::cout << j.dump(2) << "\n"; };

    if (cmd == "factorize") {
      char* count = nullptr;
      char* facts = nullptr;
      check(sepsg_factorize(g.get(), a.word.c_str(), a.limit, &count, &facts));
      auto const n  = take(count);
      auto const fs = take_json(facts);
      if (as_json) {
        emit({{"word", a.word},
              {"gens", gens_str(g.get())},
              {"count", n},
              {"factorizations", fs}});
      } else {
        std::cout << "factorizations: " << n << "\n";
        for (auto const& f : fs) {
          std::cout << join_factors(f) << "\n";
        }
      }
      return 0;
    }
    if (cmd == "member") {
      int m = 0;
      check(sepsg_member(g.get(), a.word.c_str(), &m));
      if (as_json) {
        emit({{"word", a.word}, {"member", m != 0}});
      } else {
        std::cout << (m ? "member" : "not a member") << "\n";
      }
      return 0;
    }
    if (cmd == "is-code") {
      int   code = 0;
      char* out  = nullptr;
      check(sepsg_is_code(g.get(), &code, &out));
      auto const r = take_json(out);
      if (as_json) {
        emit(r);
      } else if (code) {
        std::cout << "code\n";
      } else {
        auto const& w = r["witness"];
        std::cout << "not a code: " << w["word"].get<std::string>() << " = "
                  << join_factors(w["first"]) << " = "
                  << join_factors(w["second"]) << "\n";
      }
      return 0;
    }
    if (cmd == "is-free" || cmd == "base") {
      sepsg_gens* b = nullptr;
      check(sepsg_base(g.get(), &b));
      GensPtr    base(b);
      int        free_ = 0;
      char*      out   = nullptr;
      int        code  = 0;
      check(sepsg_is_free(g.get(), &free_));
      check(sepsg_is_code(base.get(), &code, &out));
      auto const r = take_json(out);
      if (cmd == "base") {
        if (as_json) {
          emit({{"gens", gens_str(g.get())}, {"base", gens_str(base.get())}});
        } else {
          std::cout << gens_str(base.get()) << "\n";
        }
        return 0;
      }
      if (as_json) {
        json j = {{"gens", gens_str(g.get())},
                  {"base", gens_str(base.get())},
                  {"free", free_ != 0}};
        if (r.contains("witness")) {
          j["witness"] = r["witness"];
        }
        emit(j);
      } else {
        std::cout << (free_ ? "free" : "not free") << " (base "
                  << gens_str(base.get()) << ")\n";
        if (r.contains("witness")) {
          auto const& w = r["witness"];
          std::cout << "ambiguity: " << w["word"].get<std::string>() << " = "
                    << join_factors(w["first"]) << " = "
                    << join_factors(w["second"]) << "\n";
        }
      }
      return 0;
    }
    if (cmd == "stability") {
      int   pass = 0;
      char* out  = nullptr;
      check(sepsg_stability_check(g.get(), a.bound, &pass, &out));
      auto const r = take_json(out);
      if (as_json) {
        emit(r);
      } else if (pass) {
        std::cout << "no counterexample up to length " << a.bound << " ("
                  << r["words_checked"].get<std::size_t>()
                  << " words checked)\n";
      } else {
        auto const& c = r["counterexample"];
        std::cout << "counterexample: s=" << c["s"].get<std::string>()
                  << " t1=" << c["t1"].get<std::string>()
                  << " t2=" << c["t2"].get<std::string>() << "\n";
      }
      return pass ? 0 : kExitViolation;
    }
    if (cmd == "sep-bounded") {
      char* out = nullptr;
      check(sepsg_bounded_separator(g.get(), a.max_len, a.depth, &out));
      auto const r = take_json(out);
      if (as_json) {
        emit(r);
      } else {
        for (auto const& c : r["candidates"]) {
          std::cout << c["word"].get<std::string>() << "\n";
        }
      }
      return 0;
    }
    if (cmd == "check-th13") {
      int   pass = 0;
      char* out  = nullptr;
      check(sepsg_check_theorem13(g.get(), a.bound, &pass, &out));
      auto const r = take_json(out);
      if (as_json) {
        emit(r);
      } else {
        std::cout << "condition: "
                  << (r["condition_holds"].get<bool>() ? "holds" : "violated")
                  << " (" << r["instances"].get<std::size_t>()
                  << " instances)\n";
        if (r.contains("violation")) {
          auto const& v = r["violation"];
          std::cout << "violation: t=" << v["t"].get<std::string>()
                    << " s=" << v["s"].get<std::string>()
                    << " ts in T: " << yes_no(v["ts_member"].get<bool>())
                    << ", st in T: " << yes_no(v["st_member"].get<bool>())
                    << "\n";
        }
        std::cout << "T = Sep T prediction: "
                  << (r["prediction_consistent"].get<bool>() ? "consistent"
                                                             : "inconsistent")
                  << "\n"
                  << "result: " << r["status"].get<std::string>() << "\n";
      }
      return pass ? 0 : kExitViolation;
    }
    // check-th14
    int   consistent = 0;
    char* out        = nullptr;
    check(sepsg_check_theorem14(g.get(), a.power, a.bound, &consistent, &out));
    auto const r = take_json(out);
    if (as_json) {
      emit(r);
    } else {
      std::cout << "words of A^" << a.power << ": "
                << r["power_words"].get<std::size_t>() << "\n"
                << "hypothesis: "
                << (r["vacuous"].get<bool>()
                        ? "vacuous"
                        : (r["hypothesis_holds"].get<bool>() ? "holds"
                                                             : "fails"))
                << "\n";
      for (auto const& w : r["power_words_outside_separator"]) {
        std::cout << "  outside separator: " << w.get<std::string>() << "\n";
      }
      std::cout << "free: " << yes_no(r["free"].get<bool>()) << "\n"
                << "result: " << (consistent ? "consistent" : "inconsistent")
                << "\n";
    }
    return consistent ? 0 : kExitViolation;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separators, ideals and free subsemigroups of semigroups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "sepsg 1.0.0");

  std::function<int()> action;
  bool                 as_json = false;
  auto json_flag = [&](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "Machine-readable output");
  };

  std::string table;
  std::string subset;

  auto* validate = app.add_subcommand("validate", "Check Cayley tables");
  validate->add_option("table", table, "Table file ('-' for stdin)")
      ->required();
  json_flag(validate);
  validate->callback([&] { action = [&] { return run_validate(table, as_json); }; });

  for (auto const* op : {"sep", "idealizer", "classify"}) {
    std::string const name = op;
    auto* cmd = app.add_subcommand(
        name, name == "sep"         ? "Separator of a subset"
              : name == "idealizer" ? "Idealizer of a subset"
                                    : "Including/excluding classification");
    cmd->add_option("--table", table, "Table file")->required();
    cmd->add_option("--subset", subset, "Subset literal, e.g. {0,a}")
        ->required();
    json_flag(cmd);
    cmd->callback([&, name] {
      action = [&, name] { return run_subset_op(name, table, subset, as_json); };
    });
  }

  auto* fixed = app.add_subcommand("fixed-points",
                                   "Non-empty subsets A with Sep A = A");
  fixed->add_option("--table", table, "Table file")->required();
  json_flag(fixed);
  fixed->callback([&] { action = [&] { return run_fixed_points(table, as_json); }; });

  auto* ideals = app.add_subcommand("ideals", "Ideals of a semigroup");
  ideals->require_subcommand(1);
  for (auto const* which : {"list", "prime", "maximal", "check"}) {
    std::string const name = which;
    auto* cmd = ideals->add_subcommand(
        name, name == "list"      ? "All ideals"
              : name == "prime"   ? "Prime ideals"
              : name == "maximal" ? "Maximal ideals"
                                  : "Ideal flags of one subset");
    cmd->add_option("--table", table, "Table file")->required();
    if (name == "check") {
      cmd->add_option("--subset", subset, "Subset literal")->required();
    }
    json_flag(cmd);
    cmd->callback([&, name] {
      action = [&, name] { return run_ideals(name, table, subset, as_json); };
    });
  }

  auto* unitary = app.add_subcommand(
      "unitary", "Unitary subsemigroups, or test one subset");
  unitary->add_option("--table", table, "Table file")->required();
  unitary->add_option("--subset", subset, "Subsemigroup to test");
  json_flag(unitary);
  unitary->callback([&] { action = [&] { return run_unitary(table, subset, as_json); }; });

  auto* hom = app.add_subcommand("hom", "Endomorphisms and transport checks");
  hom->require_subcommand(1);
  bool  surjective = false;
  auto* hom_list   = hom->add_subcommand("list", "Endomorphisms of a table");
  hom_list->add_option("--table", table, "Table file")->required();
  hom_list->add_flag("--surjective", surjective, "Only surjective maps");
  json_flag(hom_list);
  hom_list->callback([&] {
    action = [&] { return run_hom_list(table, surjective, as_json); };
  });

  std::string map_text;
  auto* th4 = hom->add_subcommand(
      "verify-th4", "Check phi(Sep R1) = Sep R2 for surjective endomorphisms");
  th4->add_option("--table", table, "Table file")->required();
  th4->add_option("--map", map_text,
                  "Images of the elements in order, e.g. 0,b,a,1 "
                  "(default: every surjective endomorphism)");
  json_flag(th4);
  th4->callback([&] { action = [&] { return run_hom_th4(table, map_text, as_json); }; });

  CorpusArgs r5_corpus;
  bool       relative = false;
  auto*      r5       = hom->add_subcommand(
      "remark5-search",
      "Search for surjective phi: A -> B with phi(Sep A) != Sep B");
  add_corpus_options(r5, r5_corpus);
  r5->add_flag("--relative", relative,
               "Compute separators inside A and B instead of S");
  json_flag(r5);
  r5->callback([&] {
    action = [&] { return run_remark5(r5_corpus, relative, as_json); };
  });

  unsigned    enum_order = 0;
  std::string dedupe     = "none";
  bool        count_only = false;
  auto* en = app.add_subcommand("enumerate", "All semigroups of an order");
  en->add_option("--order", enum_order, "Order, 1-4")->required();
  en->add_option("--dedupe", dedupe, "Identify up to isomorphism")
      ->check(CLI::IsMember({"none", "iso", "iso-anti"}));
  en->add_flag("--count", count_only, "Print only the number of tables");
  json_flag(en);
  en->callback([&] {
    action = [&] { return run_enumerate(enum_order, dedupe, count_only, as_json); };
  });

  VerifyArgs vargs;
  auto*      verify = app.add_subcommand(
      "verify", "Run the theorem property registry over a corpus");
  add_corpus_options(verify, vargs.corpus);
  verify->add_option("--props", vargs.props,
                     "Comma-separated property ids (default: all)");
  verify->add_option("--json", vargs.json_out,
                     "Write the JSON report to this file ('-' for stdout)");
  verify->add_option("--seed", vargs.seed, "Seed for sampled quantifiers")
      ->capture_default_str();
  verify->add_option("--jobs", vargs.jobs, "Worker threads (0: all cores)");
  verify->callback([&] { action = [&] { return run_verify(vargs); }; });

  auto* props = app.add_subcommand("props", "List registered properties");
  props->callback([&] { action = [] { return run_props(); }; });

  FreeArgs fargs;
  auto*    free_cmd = app.add_subcommand(
      "free", "Subsemigroups of free semigroups given by generators");
  free_cmd->require_subcommand(1);
  auto add_free = [&](std::string const& name, std::string const& help) {
    auto* cmd = free_cmd->add_subcommand(name, help);
    cmd->add_option("--gens", fargs.gens, "Generators, e.g. ab,ba,aba")
        ->required();
    cmd->add_option("--alphabet", fargs.alphabet,
                    "Alphabet size (default: inferred from the letters)");
    json_flag(cmd);
    cmd->callback([&, name] {
      action = [&, name] { return run_free(name, fargs, as_json); };
    });
    return cmd;
  };
  auto* fact = add_free("factorize", "Factorizations of a word");
  fact->add_option("word", fargs.word, "Word")->required();
  fact->add_option("--limit", fargs.limit, "Factorizations to list")
      ->capture_default_str();
  add_free("member", "Membership of a word")
      ->add_option("word", fargs.word, "Word")
      ->required();
  add_free("is-code", "Unique decipherability of the generators");
  add_free("is-free", "Freeness of the generated subsemigroup");
  add_free("base", "Irreducible generators");
  add_free("stability", "Bounded search for a stability counterexample")
      ->add_option("--bound", fargs.bound, "Length bound for s")
      ->capture_default_str();
  auto* sb = add_free("sep-bounded", "Bounded separator candidates");
  sb->add_option("--max-len", fargs.max_len, "Candidate length bound")
      ->capture_default_str();
  sb->add_option("--depth", fargs.depth, "Test word length bound")
      ->capture_default_str();
  add_free("check-th13", "Check tst in T => ts, st in T up to a bound")
      ->add_option("--bound", fargs.bound, "Bound on |tst|")
      ->capture_default_str();
  auto* t14 = add_free("check-th14", "Check Sep A containing A^n forces freeness");
  t14->add_option("--n", fargs.power, "Power n")->capture_default_str();
  t14->add_option("--bound", fargs.bound, "Length bound")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto const rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    return action ? action() : kExitInput;
  } catch (Failure const& f) {
    std::cerr << "sepsg: " << f.message << "\n";
    return f.code;
  } catch (json::exception const& e) {
    std::cerr << "sepsg: malformed library output: " << e.what() << "\n";
    return kExitInput;
  }
}

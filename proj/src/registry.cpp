#include "sepsg/registry.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <thread>

#include "sepsg/ideals.hpp"
#include "sepsg/morphisms.hpp"
#include "sepsg/separator.hpp"

namespace sepsg {

  namespace {

    // Largest order the registry quantifies over (all pairs of subsets).
    constexpr std::size_t kMaxRegistryOrder = 6;

    // Per-semigroup data shared by all properties.
    struct Context {
      Semigroup const*        s     = nullptr;
      std::size_t             index = 0;
      std::uint64_t           seed  = 0;
      std::size_t             samples = 0;
      std::size_t             count = 0;  // 2^n
      std::vector<SubsetMask> sep;        // by bit pattern
      std::vector<char>       subsemigroup;
      std::optional<Element>  identity;

      SubsetMask mask(std::uint64_t bits) const {
        return {s->order(), bits};
      }
      SubsetMask sep_of(SubsetMask const& a) const { return sep[a.bits()]; }
      bool       is_sub(SubsetMask const& a) const {
        return subsemigroup[a.bits()] != 0;
      }
      bool including(SubsetMask const& a) const {
        return sep_of(a).subset_of(a);
      }
      bool excluding(SubsetMask const& a) const {
        return sep_of(a).subset_of(a.complement());
      }
    };

    Context make_context(Semigroup const& s, std::size_t index,
                         RegistryOptions const& opts) {
      if (s.order() > kMaxRegistryOrder) {
        raise(ErrorCode::OrderTooLarge,
              "property registry supports orders up to "
                  + std::to_string(kMaxRegistryOrder));
      }
      Context ctx;
      ctx.s       = &s;
      ctx.index   = index;
      ctx.seed    = opts.seed;
      ctx.samples = opts.triple_samples;
      ctx.sep     = separator_table(s);
      ctx.count   = ctx.sep.size();
      ctx.subsemigroup.resize(ctx.count);
      for (std::uint64_t m = 0; m < ctx.count; ++m) {
        ctx.subsemigroup[m] = is_subsemigroup(s, ctx.mask(m)) ? 1 : 0;
      }
      ctx.identity = identity_element(s);
      return ctx;
    }

    struct Partial {
      std::size_t                          instances  = 0;
      std::size_t                          nonvacuous = 0;
      std::size_t                          violation_count = 0;
      std::vector<WitnessRecord>           violations;
      std::vector<WitnessRecord>           examples;
      std::map<std::string, std::uint64_t> counters;
    };

    class Recorder {
     public:
      Recorder(Context const& ctx, Partial& out, std::size_t max_records)
          : _ctx(ctx), _out(out), _max(max_records) {}

      Context const& ctx() const { return _ctx; }
      Partial&       out() { return _out; }

      void instance(bool hypothesis = true) {
        ++_out.instances;
        if (hypothesis) {
          ++_out.nonvacuous;
        }
      }

      // Records a violation when `ok` is false.
      void expect(bool ok,
                  std::vector<std::pair<std::string, SubsetMask>> subsets,
                  std::string note = {}, std::vector<Element> map = {}) {
        if (ok) {
          return;
        }
        ++_out.violation_count;
        if (_out.violations.size() < _max) {
          _out.violations.push_back(
              record(std::move(subsets), std::move(note), std::move(map)));
        }
      }

      void example(std::vector<std::pair<std::string, SubsetMask>> subsets,
                   std::string note = {}, std::vector<Element> map = {}) {
        if (_out.examples.size() < _max) {
          _out.examples.push_back(
              record(std::move(subsets), std::move(note), std::move(map)));
        }
      }

     private:
      WitnessRecord record(
          std::vector<std::pair<std::string, SubsetMask>> subsets,
          std::string note, std::vector<Element> map) const {
        WitnessRecord w;
        w.semigroup_index = _ctx.index;
        w.order           = _ctx.s->order();
        w.table.assign(_ctx.s->table().begin(), _ctx.s->table().end());
        w.subsets = std::move(subsets);
        w.map     = std::move(map);
        w.note    = std::move(note);
        return w;
      }

      Context const& _ctx;
      Partial&       _out;
      std::size_t    _max;
    };

    template <typename F>
    void for_each_subset(Context const& ctx, F&& f) {
      for (std::uint64_t m = 0; m < ctx.count; ++m) {
        f(ctx.mask(m));
      }
    }

    template <typename F>
    void for_each_pair(Context const& ctx, F&& f) {
      for (std::uint64_t a = 0; a < ctx.count; ++a) {
        for (std::uint64_t b = 0; b < ctx.count; ++b) {
          f(ctx.mask(a), ctx.mask(b));
        }
      }
    }

    ////////////////////////////////////////////////////////////////////
    // Properties
    ////////////////////////////////////////////////////////////////////

    void p_r1a(Recorder& r) {
      auto const& c = r.ctx();
      for_each_subset(c, [&](SubsetMask a) {
        r.instance();
        r.expect(c.sep_of(a) == c.sep_of(a.complement()),
                 {{"A", a}, {"SepA", c.sep_of(a)},
                  {"SepA'", c.sep_of(a.complement())}});
      });
    }

    void p_r1b(Recorder& r) {
      auto const& c = r.ctx();
      for_each_subset(c, [&](SubsetMask a) {
        auto const sep = c.sep_of(a);
        r.instance();
        r.expect(sep.is_empty() || c.is_sub(sep), {{"A", a}, {"SepA", sep}});
      });
    }

    void p_r2(Recorder& r) {
      auto const& c = r.ctx();
      for_each_subset(c, [&](SubsetMask a) {
        r.instance(c.identity.has_value());
        if (c.identity) {
          r.expect(c.sep_of(a).contains(*c.identity),
                   {{"A", a}, {"SepA", c.sep_of(a)}},
                   "identity " + std::to_string(*c.identity));
        }
      });
    }

    void p_r3(Recorder& r) {
      auto const& c = r.ctx();
      for_each_subset(c, [&](SubsetMask a) {
        bool const hyp = !a.is_empty() && !a.is_full() && is_ideal(*c.s, a);
        r.instance(hyp);
        if (hyp) {
          r.expect(!a.intersects(c.sep_of(a)),
                   {{"R", a}, {"SepR", c.sep_of(a)}});
        }
      });
    }

    void check_family(Recorder& r, std::vector<SubsetMask> const& family) {
      auto const& c     = r.ctx();
      SubsetMask  meet  = c.mask(c.count - 1);
      SubsetMask  uni   = c.mask(0);
      SubsetMask  inter = c.mask(c.count - 1);
      for (auto const& a : family) {
        meet  = meet & c.sep_of(a);
        uni   = uni | a;
        inter = inter & a;
      }
      std::vector<std::pair<std::string, SubsetMask>> subsets;
      for (std::size_t i = 0; i < family.size(); ++i) {
        subsets.emplace_back("A" + std::to_string(i + 1), family[i]);
      }
      r.instance(!meet.is_empty());
      auto with = [&](char const* name, SubsetMask m) {
        auto v = subsets;
        v.emplace_back(name, m);
        return v;
      };
      r.expect(meet.subset_of(c.sep_of(uni)), with("Sep(union)", c.sep_of(uni)),
               "intersection of separators not inside Sep of union");
      r.expect(meet.subset_of(c.sep_of(inter)),
               with("Sep(intersection)", c.sep_of(inter)),
               "intersection of separators not inside Sep of intersection");
    }

    void p_t1(Recorder& r) {
      auto const& c = r.ctx();
      for_each_pair(c, [&](SubsetMask a, SubsetMask b) {
        check_family(r, {a, b});
      });
      // Seeded per semigroup so results do not depend on scheduling.
      std::seed_seq seq{static_cast<std::uint32_t>(c.seed),
                        static_cast<std::uint32_t>(c.seed >> 32),
                        static_cast<std::uint32_t>(c.index)};
      std::mt19937_64                              rng(seq);
      std::uniform_int_distribution<std::uint64_t> pick(0, c.count - 1);
      for (std::size_t i = 0; i < c.samples; ++i) {
        check_family(r, {c.mask(pick(rng)), c.mask(pick(rng)),
                         c.mask(pick(rng))});
      }
    }

    void p_c1(Recorder& r) {
      auto const& c = r.ctx();
      for_each_subset(c, [&](SubsetMask a) {
        auto const sep    = c.sep_of(a);
        auto const lhs    = sep & c.sep_of(sep);
        auto const rhs    = c.sep_of(a | sep);
        r.instance(!lhs.is_empty());
        r.expect(lhs.subset_of(rhs),
                 {{"A", a}, {"SepA∩SepSepA", lhs}, {"Sep(A∪SepA)", rhs}});
      });
    }

    void p_t2(Recorder& r) {
      auto const& c = r.ctx();
      for_each_subset(c, [&](SubsetMask a) {
        bool const hyp = c.is_sub(a);
        r.instance(hyp);
        if (hyp) {
          auto const u = a | c.sep_of(a);
          r.expect(c.is_sub(u), {{"A", a}, {"A∪SepA", u}});
        }
      });
    }

    void p_t3(Recorder& r) {
      auto const& c = r.ctx();
      for_each_subset(c, [&](SubsetMask a) {
        auto const sep = c.sep_of(a);
        bool const hyp = !sep.is_empty();
        r.instance(hyp);
        if (hyp) {
          r.expect(sep.subset_of(a) || sep.subset_of(a.complement()),
                   {{"A", a}, {"SepA", sep}});
          // classify() must agree and never report a trichotomy failure.
          bool agrees = false;
          try {
            agrees = classify(*c.s, a) != SeparatorKind::EmptySeparator;
          } catch (Error const&) {
          }
          r.expect(agrees, {{"A", a}}, "classify disagrees");
        }
      });
    }

    void p_t5(Recorder& r) {
      auto const& c = r.ctx();
      for_each_pair(c, [&](SubsetMask a, SubsetMask b) {
        bool const meet = c.sep_of(a).intersects(c.sep_of(b));
        bool const inc  = meet && c.including(a);
        bool const exc  = meet && c.excluding(a);
        r.instance(inc || exc);
        if (inc) {
          auto const u = a | b;
          r.expect(c.including(u) && !c.sep_of(u).is_empty(),
                   {{"A", a}, {"B", b}, {"Sep(A∪B)", c.sep_of(u)}},
                   "including A");
        }
        if (exc) {
          auto const i = a & b;
          r.expect(c.excluding(i) && !c.sep_of(i).is_empty(),
                   {{"A", a}, {"B", b}, {"Sep(A∩B)", c.sep_of(i)}},
                   "excluding A");
        }
      });
    }

    void p_t6(Recorder& r) {
      auto const& c = r.ctx();
      for_each_pair(c, [&](SubsetMask a, SubsetMask b) {
        bool const meet = c.sep_of(a).intersects(c.sep_of(b));
        bool const inc  = meet && c.including(a) && c.including(b);
        bool const exc  = meet && c.excluding(a) && c.excluding(b);
        r.instance(inc || exc);
        if (inc) {
          auto const i = a & b;
          r.expect(c.including(i) && !c.sep_of(i).is_empty(),
                   {{"A", a}, {"B", b}, {"Sep(A∩B)", c.sep_of(i)}},
                   "both including");
        }
        if (exc) {
          auto const u = a | b;
          r.expect(c.excluding(u) && !c.sep_of(u).is_empty(),
                   {{"A", a}, {"B", b}, {"Sep(A∪B)", c.sep_of(u)}},
                   "both excluding");
        }
      });
    }

    void p_c3(Recorder& r) {
      auto const& c = r.ctx();
      for_each_pair(c, [&](SubsetMask a, SubsetMask b) {
        bool const hyp = c.sep_of(a).intersects(c.sep_of(b)) && c.including(a)
                         && c.excluding(b);
        r.instance(hyp);
        if (hyp) {
          auto const u = a | b;
          auto const i = a & b;
          r.expect(c.including(u) && c.excluding(i) && !c.sep_of(u).is_empty()
                       && !c.sep_of(i).is_empty(),
                   {{"A", a},
                    {"B", b},
                    {"Sep(A∪B)", c.sep_of(u)},
                    {"Sep(A∩B)", c.sep_of(i)}});
        }
      });
    }

    void p_c4(Recorder& r) {
      auto const& c = r.ctx();
      for_each_pair(c, [&](SubsetMask a, SubsetMask b) {
        bool const hyp
            = c.sep_of(a).intersects(c.sep_of(b)) && c.including(a);
        r.instance(hyp);
        if (hyp) {
          auto const d = b - a;
          r.expect(c.excluding(d) && !c.sep_of(d).is_empty(),
                   {{"A", a}, {"B", b}, {"Sep(B∖A)", c.sep_of(d)}});
        }
      });
    }

    void p_t7(Recorder& r) {
      auto const& c = r.ctx();
      for_each_subset(c, [&](SubsetMask a) {
        auto const sep = c.sep_of(a);
        bool const hyp = !sep.is_empty();
        r.instance(hyp);
        if (hyp) {
          r.expect(c.sep_of(sep).subset_of(sep),
                   {{"A", a}, {"SepA", sep}, {"SepSepA", c.sep_of(sep)}});
        }
      });
    }

    void p_c5(Recorder& r) {
      auto const& c = r.ctx();
      for_each_subset(c, [&](SubsetMask a) {
        auto const sep = c.sep_of(a);
        bool const hyp = is_minimal_subsemigroup(*c.s, sep);
        r.instance(hyp);
        if (hyp) {
          auto const ss = c.sep_of(sep);
          r.expect(ss.is_empty() || ss == sep,
                   {{"A", a}, {"SepA", sep}, {"SepSepA", ss}});
        }
      });
    }

    void p_t8(Recorder& r) {
      auto const& c = r.ctx();
      std::vector<SubsetMask> fixed, unitary;
      for_each_subset(c, [&](SubsetMask a) {
        if (!a.is_empty() && c.sep_of(a) == a) {
          fixed.push_back(a);
        }
        if (!c.is_sub(a)) {
          return;
        }
        r.instance();
        bool const u = is_unitary(*c.s, a);
        if (u) {
          unitary.push_back(a);
        }
        r.expect((c.sep_of(a) == a) == u, {{"A", a}, {"SepA", c.sep_of(a)}},
                 u ? "unitary but A != SepA" : "A = SepA but not unitary");
      });
      // Fixed points of Sep coincide with the unitary subsemigroups.
      r.instance();
      r.expect(fixed == separator_fixed_points(*c.s) && fixed == unitary, {},
               "separator fixed points differ from unitary subsemigroups");
    }

    void p_t9(Recorder& r) {
      auto const& c = r.ctx();
      for_each_subset(c, [&](SubsetMask p) {
        if (!c.is_sub(p)) {
          return;
        }
        auto const comp = p.complement();
        bool const via_complement
            = c.is_sub(comp) && is_unitary(*c.s, comp);
        bool const prime = is_prime_ideal(*c.s, p);
        r.instance(prime || via_complement);
        r.expect(prime == via_complement, {{"P", p}},
                 prime ? "prime ideal whose complement is not a unitary "
                         "subsemigroup"
                       : "complement unitary but P not a prime ideal");
      });
      r.instance();
      r.expect(enumerate_prime_ideals(*c.s) == prime_ideals_via_complement(*c.s),
               {}, "prime ideal enumeration routes disagree");
    }

    void p_t10(Recorder& r) {
      auto const& c = r.ctx();
      for_each_subset(c, [&](SubsetMask i) {
        if (i.is_empty() || !is_maximal_ideal(*c.s, i)) {
          return;
        }
        bool const hyp
            = is_maximal_subsemigroup(*c.s, i) && !c.sep_of(i).is_empty();
        r.instance(hyp);
        if (hyp) {
          r.expect(is_prime_ideal(*c.s, i), {{"I", i}, {"SepI", c.sep_of(i)}});
        }
        // The generated-superset route must agree with enumeration.
        r.expect(is_maximal_ideal_by_generation(*c.s, i), {{"I", i}},
                 "maximal ideal routes disagree");
      });
    }

    void p_t4(Recorder& r) {
      auto const& c = r.ctx();
      for (auto const& phi : enumerate_endomorphisms(*c.s, true)) {
        auto const res = check_theorem4(*c.s, phi);
        r.out().instances += res.instances;
        r.out().nonvacuous += res.instances;
        if (res.witness) {
          r.expect(false,
                   {{"R1", res.witness->r1},
                    {"R2", res.witness->r2},
                    {"lhs", res.witness->lhs},
                    {"rhs", res.witness->rhs}},
                   "φ(Sep R1) != Sep R2", phi.map());
        }
      }
    }

    void p_c2(Recorder& r) {
      auto const& c    = r.ctx();
      auto const  subs = all_subsemigroups(*c.s);
      for (auto const& phi : enumerate_endomorphisms(*c.s, true)) {
        for (auto const& a : subs) {
          auto const b = image(phi, a);
          r.instance();
          auto const lhs = image(phi, c.sep_of(a));
          r.expect(lhs == c.sep_of(b),
                   {{"A", a}, {"B", b}, {"lhs", lhs}, {"rhs", c.sep_of(b)}},
                   "φ(SepA) != SepB", phi.map());
        }
      }
    }

    void p_hom_enum(Recorder& r) {
      auto const& c = r.ctx();
      auto const  n = c.s->order();
      auto const  all = enumerate_endomorphisms(*c.s, false);
      for (auto const& phi : all) {
        r.instance();
        r.expect(is_homomorphism(*c.s, *c.s, phi.map()), {},
                 "enumerated map is not multiplicative", phi.map());
      }
      if (n > 3) {
        return;
      }
      // Completeness against the n^n scan.
      std::vector<HomomorphismMap> scan;
      std::vector<Element>         map(n, 0);
      while (true) {
        if (is_homomorphism(*c.s, *c.s, map)) {
          scan.emplace_back(n, map);
        }
        std::size_t i = n;
        while (i > 0 && map[i - 1] + 1u == n) {
          map[--i] = 0;
        }
        if (i == 0) {
          break;
        }
        ++map[i - 1];
      }
      r.instance();
      r.expect(scan == all, {}, "enumeration differs from brute-force scan");
      std::vector<HomomorphismMap> surj;
      for (auto const& phi : scan) {
        if (phi.is_surjective()) {
          surj.push_back(phi);
        }
      }
      r.instance();
      r.expect(surj == enumerate_endomorphisms(*c.s, true), {},
               "surjective filter differs from brute-force scan");
    }

    void p_r5(Recorder& r) {
      auto const& c      = r.ctx();
      auto const  survey = remark5_survey({*c.s}, Remark5Mode::Ambient,
                                         std::numeric_limits<std::size_t>::max());
      auto&       cnt    = r.out().counters;
      cnt["pairs"] += survey.pairs;
      cnt["maps"] += survey.maps;
      cnt["witnesses_total"] += survey.witnesses_total;
      cnt["claim2_applicable"] += survey.claim2_applicable;
      cnt["claim2_confirmed"] += survey.claim2_confirmed;
      cnt["claim2_undefined"] += survey.claim2_undefined;
      cnt["claim2_refuted"] += survey.claim2_refutations.size();
      r.out().instances += survey.maps;
      for (auto const& w : survey.witnesses) {
        r.example({{"A", w.a}, {"B", w.b}, {"lhs", w.lhs}, {"rhs", w.rhs}},
                  "φ(SepA) != SepB", w.map);
      }
      for (auto const& w : survey.claim2_refutations) {
        r.example({{"A", w.a}, {"B", w.b}, {"lhs", w.lhs}, {"rhs", w.rhs}},
                  "second claim refuted: φ(SepSepA) != SepSepB", w.map);
      }
    }

    using PropertyFn = void (*)(Recorder&);

    struct Entry {
      PropertyInfo info;
      PropertyFn   fn;
    };

    std::vector<Entry> const& entries() {
      static std::vector<Entry> const table = {
          {{"P-R1a", "Sep A = Sep of the complement"}, p_r1a},
          {{"P-R1b", "Sep A is empty or a subsemigroup"}, p_r1b},
          {{"P-R2", "the identity lies in every separator"}, p_r2},
          {{"P-R3", "R ∩ Sep R = ∅ for ideals R ≠ S"}, p_r3},
          {{"P-T1", "∩ Sep A_f ⊆ Sep(∪ A_f) and Sep(∩ A_f)"}, p_t1},
          {{"P-C1", "SepA ∩ SepSepA ⊆ Sep(A ∪ SepA)"}, p_c1},
          {{"P-T2", "A ∪ Sep A is a subsemigroup for subsemigroups A"}, p_t2},
          {{"P-T3", "non-empty Sep A lies in A or in its complement"}, p_t3},
          {{"P-T4", "φ(Sep R1) = Sep R2 for surjective endomorphisms"}, p_t4},
          {{"P-C2", "automorphisms carry Sep A onto Sep φ(A)"}, p_c2},
          {{"P-T5", "including A ∪ B / excluding A ∩ B"}, p_t5},
          {{"P-T6", "including A ∩ B / excluding A ∪ B"}, p_t6},
          {{"P-C3", "including ∪ excluding, excluding ∩ including"}, p_c3},
          {{"P-C4", "B ∖ A is separator excluding"}, p_c4},
          {{"P-T7", "SepSepA ⊆ SepA when SepA ≠ ∅"}, p_t7},
          {{"P-C5", "minimal Sep A: SepSepA is ∅ or Sep A"}, p_c5},
          {{"P-T8", "A = Sep A iff A is unitary"}, p_t8},
          {{"P-T9", "prime ideal iff complement is unitary"}, p_t9},
          {{"P-T10", "maximal ideal + maximal subsemigroup ⇒ prime"}, p_t10},
          {{"HOM-ENUM", "endomorphism enumeration sound and complete"},
           p_hom_enum},
          {{"R5", "search for φ(SepA) != SepB (existence probe)", true},
           p_r5},
      };
      return table;
    }

    Entry const& find_entry(std::string_view id) {
      for (auto const& e : entries()) {
        if (e.info.id == id) {
          return e;
        }
      }
      raise(ErrorCode::UnknownPropertyId,
            "unknown property id '" + std::string(id) + "'");
    }

    template <typename F>
    void parallel_for(std::size_t count, unsigned jobs, F&& f) {
      if (jobs == 0) {
        jobs = std::max(1u, std::thread::hardware_concurrency());
      }
      jobs = static_cast<unsigned>(
          std::min<std::size_t>(jobs, std::max<std::size_t>(count, 1)));
      if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
          f(i);
        }
        return;
      }
      std::atomic<std::size_t> next{0};
      std::exception_ptr       error;
      std::mutex               error_mutex;
      {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
          workers.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
              try {
                f(i);
              } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                  error = std::current_exception();
                }
              }
            }
          });
        }
      }
      if (error) {
        std::rethrow_exception(error);
      }
    }

  }  // namespace

  std::vector<PropertyInfo> const& property_registry() {
    static std::vector<PropertyInfo> const infos = [] {
      std::vector<PropertyInfo> out;
      for (auto const& e : entries()) {
        out.push_back(e.info);
      }
      return out;
    }();
    return infos;
  }

  std::vector<std::string> parse_property_selection(std::string_view csv) {
    std::vector<std::string> out;
    if (csv.find_first_not_of(" \t,") == std::string_view::npos) {
      for (auto const& e : entries()) {
        out.emplace_back(e.info.id);
      }
      return out;
    }
    std::size_t start = 0;
    while (start <= csv.size()) {
      auto comma = csv.find(',', start);
      auto tok   = csv.substr(start, comma == std::string_view::npos
                                       ? std::string_view::npos
                                       : comma - start);
      auto b     = tok.find_first_not_of(" \t");
      if (b != std::string_view::npos) {
        auto e = tok.find_last_not_of(" \t");
        tok    = tok.substr(b, e - b + 1);
        find_entry(tok);
        if (std::find(out.begin(), out.end(), tok) == out.end()) {
          out.emplace_back(tok);
        }
      }
      if (comma == std::string_view::npos) {
        break;
      }
      start = comma + 1;
    }
    return out;
  }

  std::vector<VerificationReport> run_registry(
      std::vector<Semigroup> const&   corpus,
      std::vector<std::string> const& property_ids,
      std::string const&              corpus_spec,
      RegistryOptions const&          options) {
    std::vector<Entry const*> selected;
    for (auto const& id : property_ids) {
      selected.push_back(&find_entry(id));
    }
    std::vector<Context> contexts(corpus.size());
    parallel_for(corpus.size(), options.jobs, [&](std::size_t i) {
      contexts[i] = make_context(corpus[i], i, options);
    });

    std::vector<VerificationReport> reports;
    for (auto const* entry : selected) {
      auto const start = std::chrono::steady_clock::now();
      std::vector<Partial> partials(corpus.size());
      parallel_for(corpus.size(), options.jobs, [&](std::size_t i) {
        Recorder rec(contexts[i], partials[i], options.max_records);
        entry->fn(rec);
      });
      VerificationReport report;
      report.property_id = std::string(entry->info.id);
      report.corpus_spec = corpus_spec;
      report.seed        = options.seed;
      report.semigroups  = corpus.size();
      // Partials are merged in corpus order, so the output does not depend
      // on how work was scheduled.
      for (auto& p : partials) {
        report.instances_checked += p.instances;
        report.nonvacuous += p.nonvacuous;
        report.violation_count += p.violation_count;
        for (auto& w : p.violations) {
          if (report.violations.size() < options.max_records) {
            report.violations.push_back(std::move(w));
          }
        }
        for (auto& w : p.examples) {
          if (report.examples_found.size() < options.max_records) {
            report.examples_found.push_back(std::move(w));
          }
        }
        for (auto const& [k, v] : p.counters) {
          report.counters[k] += v;
        }
      }
      report.runtime_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
      reports.push_back(std::move(report));
    }
    return reports;
  }

}  // namespace sepsg

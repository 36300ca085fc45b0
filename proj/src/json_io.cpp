#include "sepsg/json_io.hpp"

namespace sepsg {

  using nlohmann::json;

  namespace {
    json words_json(std::vector<Word> const& ws) {
      json out = json::array();
      for (auto const& w : ws) {
        out.push_back(w.str());
      }
      return out;
    }

    json table_json(std::size_t n, std::span<Element const> table) {
      json rows = json::array();
      for (std::size_t x = 0; x < n; ++x) {
        json row = json::array();
        for (std::size_t y = 0; y < n; ++y) {
          row.push_back(table[x * n + y]);
        }
        rows.push_back(std::move(row));
      }
      return rows;
    }

    json map_json(std::vector<Element> const& map) {
      json out = json::array();
      for (auto v : map) {
        out.push_back(v);
      }
      return out;
    }
  }  // namespace

  json subset_json(SubsetMask const& a) {
    json out = json::array();
    for (auto x : a.elements()) {
      out.push_back(x);
    }
    return out;
  }

  json semigroup_json(Semigroup const& s) {
    json out = {{"order", s.order()},
                {"table", table_json(s.order(), s.table())}};
    if (s.has_names()) {
      out["names"] = s.names();
    }
    return out;
  }

  json witness_json(WitnessRecord const& w) {
    json out = {{"semigroup",
                 {{"index", w.semigroup_index},
                  {"order", w.order},
                  {"table", table_json(w.order, w.table)}}}};
    for (auto const& [name, mask] : w.subsets) {
      out[name] = subset_json(mask);
    }
    if (!w.map.empty()) {
      out["map"] = map_json(w.map);
    }
    if (!w.note.empty()) {
      out["note"] = w.note;
    }
    return out;
  }

  json report_json(VerificationReport const& r) {
    json violations = json::array();
    for (auto const& w : r.violations) {
      violations.push_back(witness_json(w));
    }
    json examples = json::array();
    for (auto const& w : r.examples_found) {
      examples.push_back(witness_json(w));
    }
    json out = {{"property_id", r.property_id},
                {"corpus_spec", r.corpus_spec},
                {"status", r.pass() ? "pass" : "fail"},
                {"semigroups", r.semigroups},
                {"instances_checked", r.instances_checked},
                {"nonvacuous", r.nonvacuous},
                {"violation_count", r.violation_count},
                {"violations", std::move(violations)},
                {"examples_found", std::move(examples)},
                {"seed", r.seed},
                {"runtime_ms", r.runtime_ms}};
    if (!r.counters.empty()) {
      out["counters"] = r.counters;
    }
    return out;
  }

  json theorem4_json(Theorem4Result const& r, HomomorphismMap const& phi) {
    json out = {{"map", map_json(phi.map())},
                {"instances", r.instances},
                {"status", r.pass() ? "pass" : "fail"}};
    if (r.witness) {
      out["witness"] = {{"R1", subset_json(r.witness->r1)},
                        {"R2", subset_json(r.witness->r2)},
                        {"lhs", subset_json(r.witness->lhs)},
                        {"rhs", subset_json(r.witness->rhs)}};
    }
    return out;
  }

  json remark5_witness_json(std::vector<Semigroup> const& corpus,
                            Remark5Witness const&         w) {
    json sg = semigroup_json(corpus[w.semigroup_index]);
    sg["index"] = w.semigroup_index;
    return {{"semigroup", std::move(sg)},
            {"A", subset_json(w.a)},
            {"B", subset_json(w.b)},
            {"map", map_json(w.map)},
            {"lhs", subset_json(w.lhs)},
            {"rhs", subset_json(w.rhs)}};
  }

  json remark5_survey_json(std::vector<Semigroup> const& corpus,
                           Remark5Survey const&          r) {
    json witnesses = json::array();
    for (auto const& w : r.witnesses) {
      witnesses.push_back(remark5_witness_json(corpus, w));
    }
    json refutations = json::array();
    for (auto const& w : r.claim2_refutations) {
      refutations.push_back(remark5_witness_json(corpus, w));
    }
    return {{"semigroups", r.semigroups},
            {"pairs", r.pairs},
            {"maps", r.maps},
            {"witnesses_total", r.witnesses_total},
            {"witnesses", std::move(witnesses)},
            {"claim2",
             {{"applicable", r.claim2_applicable},
              {"confirmed", r.claim2_confirmed},
              {"undefined", r.claim2_undefined},
              {"refuted", r.claim2_refutations.size()},
              {"refutations", std::move(refutations)}}}};
  }

  json code_json(GeneratorSet const& g, CodeResult const& r) {
    json out = {{"gens", g.str()}, {"is_code", r.is_code}};
    if (r.witness) {
      auto factors = [&](std::vector<std::size_t> const& idx) {
        json f = json::array();
        for (auto i : idx) {
          f.push_back(g.words()[i].str());
        }
        return f;
      };
      out["witness"] = {{"word", r.witness->word.str()},
                        {"first", factors(r.witness->first)},
                        {"second", factors(r.witness->second)}};
    }
    return out;
  }

  json bounded_separator_json(BoundedSepResult const& r) {
    json cands = json::array();
    for (auto const& c : r.candidates) {
      cands.push_back({{"word", c.word.str()},
                       {"verified_depth", c.verified_depth}});
    }
    return {{"length_bound", r.length_bound},
            {"depth", r.depth},
            {"candidates", std::move(cands)}};
  }

  json stability_json(StabilityResult const& r) {
    json out = {{"bound", r.bound},
                {"free", r.free},
                {"words_checked", r.words_checked},
                {"status", r.pass() ? "pass" : "counterexample"}};
    if (r.counterexample) {
      out["counterexample"] = {{"s", r.counterexample->s.str()},
                               {"t1", r.counterexample->t1.str()},
                               {"t2", r.counterexample->t2.str()}};
    }
    return out;
  }

  json theorem13_json(Theorem13Result const& r) {
    json out = {{"bound", r.bound},
                {"instances", r.instances},
                {"condition_holds", r.condition_holds()},
                {"prediction_consistent", r.prediction_consistent()},
                {"status", r.pass() ? "pass" : "fail"},
                {"separator", bounded_separator_json(r.separator)},
                {"candidates_outside_t", words_json(r.candidates_outside_t)},
                {"members_not_candidates",
                 words_json(r.members_not_candidates)}};
    if (r.violation) {
      out["violation"] = {{"t", r.violation->t.str()},
                          {"s", r.violation->s.str()},
                          {"ts_member", r.violation->ts_member},
                          {"st_member", r.violation->st_member}};
    }
    return out;
  }

  json theorem14_json(Theorem14Report const& r) {
    return {{"power", r.power},
            {"bound", r.bound},
            {"power_words", r.power_words},
            {"power_words_outside_separator",
             words_json(r.power_words_outside_separator)},
            {"vacuous", r.vacuous()},
            {"hypothesis_holds", r.hypothesis_holds()},
            {"free", r.free},
            {"consistent", r.consistent()}};
  }

}  // namespace sepsg

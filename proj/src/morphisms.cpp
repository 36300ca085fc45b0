#include "sepsg/morphisms.hpp"

#include <set>

#include "sepsg/separator.hpp"

namespace sepsg {

  HomomorphismMap::HomomorphismMap(std::size_t          target_order,
                                   std::vector<Element> map)
      : _target_order(target_order), _map(std::move(map)) {
    for (auto y : _map) {
      if (y >= _target_order) {
        raise(ErrorCode::InvalidArgument,
              "map value " + std::to_string(y) + " outside target of order "
                  + std::to_string(_target_order));
      }
    }
  }

  bool HomomorphismMap::is_surjective() const {
    std::set<Element> img(_map.begin(), _map.end());
    return img.size() == _target_order;
  }

  bool is_homomorphism(Semigroup const&            source,
                       Semigroup const&            target,
                       std::vector<Element> const& map) {
    std::size_t n = source.order();
    if (map.size() != n) {
      return false;
    }
    for (auto y : map) {
      if (y >= target.order()) {
        return false;
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (map[source.product(x, y)] != target.product(map[x], map[y])) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {

    class HomSearch {
     public:
      HomSearch(Semigroup const& source, Semigroup const& target,
                bool surjective_only)
          : _src(source),
            _dst(target),
            _surjective_only(surjective_only),
            _map(source.order(), 0) {}

      std::vector<HomomorphismMap> run() {
        extend(0);
        return std::move(_found);
      }

     private:
      // Checks every product u*v with u, v, u*v <= x that involves x.
      bool consistent(std::size_t x) const {
        for (std::size_t u = 0; u <= x; ++u) {
          for (std::size_t v = 0; v <= x; ++v) {
            std::size_t const uv = _src.product(u, v);
            if (uv > x || (u != x && v != x && uv != x)) {
              continue;
            }
            if (_map[uv] != _dst.product(_map[u], _map[v])) {
              return false;
            }
          }
        }
        return true;
      }

      void extend(std::size_t x) {
        std::size_t const n = _src.order();
        if (x == n) {
          HomomorphismMap phi(_dst.order(), _map);
          if (!_surjective_only || phi.is_surjective()) {
            _found.push_back(std::move(phi));
          }
          return;
        }
        for (std::size_t v = 0; v < _dst.order(); ++v) {
          _map[x] = static_cast<Element>(v);
          if (consistent(x)) {
            extend(x + 1);
          }
        }
      }

      Semigroup const&             _src;
      Semigroup const&             _dst;
      bool                         _surjective_only;
      std::vector<Element>         _map;
      std::vector<HomomorphismMap> _found;
    };

    void check_phi(Semigroup const& s, HomomorphismMap const& phi) {
      if (phi.source_order() != s.order() || phi.target_order() != s.order()) {
        raise(ErrorCode::AmbientMismatch,
              "map is not an endomorphism of a semigroup of order "
                  + std::to_string(s.order()));
      }
    }

  }  // namespace

  std::vector<HomomorphismMap> enumerate_homomorphisms(
      Semigroup const& source, Semigroup const& target, bool surjective_only) {
    return HomSearch(source, target, surjective_only).run();
  }

  std::vector<HomomorphismMap> enumerate_endomorphisms(Semigroup const& s,
                                                       bool surjective_only) {
    if (s.order() > kMaxEndomorphismOrder) {
      raise(ErrorCode::OrderTooLarge,
            "endomorphism enumeration needs order <= "
                + std::to_string(kMaxEndomorphismOrder));
    }
    return enumerate_homomorphisms(s, s, surjective_only);
  }

  SubsetMask image(HomomorphismMap const& phi, SubsetMask const& a) {
    if (a.ambient() != phi.source_order()) {
      raise(ErrorCode::AmbientMismatch, "subset does not match map source");
    }
    std::uint64_t bits = 0;
    for (auto x : a.elements()) {
      bits |= std::uint64_t{1} << phi(x);
    }
    return {phi.target_order(), bits};
  }

  SubsetMask preimage(HomomorphismMap const& phi, SubsetMask const& b) {
    if (b.ambient() != phi.target_order()) {
      raise(ErrorCode::AmbientMismatch, "subset does not match map target");
    }
    std::uint64_t bits = 0;
    for (std::size_t x = 0; x < phi.source_order(); ++x) {
      if (b.contains(phi(x))) {
        bits |= std::uint64_t{1} << x;
      }
    }
    return {phi.source_order(), bits};
  }

  Theorem4Result check_theorem4(Semigroup const& s, HomomorphismMap const& phi) {
    check_phi(s, phi);
    if (!is_homomorphism(s, s, phi.map())) {
      raise(ErrorCode::InvalidArgument, "map is not a homomorphism");
    }
    if (!phi.is_surjective()) {
      raise(ErrorCode::NotSurjective, "map is not surjective");
    }
    Theorem4Result result;
    for (auto const& r2 : all_subsemigroups(s)) {
      auto const r1 = preimage(phi, r2);
      if (!is_subsemigroup(s, r1)) {
        continue;
      }
      ++result.instances;
      auto const lhs = image(phi, separator(s, r1));
      auto const rhs = separator(s, r2);
      if (lhs != rhs && !result.witness) {
        result.witness = Theorem4Witness{r1, r2, lhs, rhs};
      }
    }
    return result;
  }

  namespace {

    // Lifts a subset of restrict_to(s, host) back into s.
    SubsetMask lift(Semigroup const&            s,
                    SubsetMask const&           local,
                    std::vector<Element> const& host) {
      std::uint64_t bits = 0;
      for (auto i : local.elements()) {
        bits |= std::uint64_t{1} << host[i];
      }
      return {s.order(), bits};
    }

    struct SurveyState {
      Remark5Survey& out;
      std::size_t    max_witnesses;
      bool           stop_at_first;
      bool           done = false;
    };

    void survey_one(Semigroup const& s, std::size_t index, Remark5Mode mode,
                    SurveyState& st) {
      if (s.order() > kMaxEndomorphismOrder) {
        raise(ErrorCode::OrderTooLarge,
              "Remark 5 search needs order <= "
                  + std::to_string(kMaxEndomorphismOrder));
      }
      auto& out = st.out;
      ++out.semigroups;
      std::vector<SubsetMask> including;
      for (auto const& a : all_subsemigroups(s)) {
        if (is_separator_including(s, a)) {
          including.push_back(a);
        }
      }
      for (auto const& a : including) {
        auto const a_elems = a.elements();
        auto const a_sg    = restrict_to(s, a);
        auto const sep_a   = mode == Remark5Mode::Ambient
                                 ? separator(s, a)
                                 : lift(s, separator(a_sg, a_sg.full()),
                                        a_elems);
        for (auto const& b : including) {
          ++out.pairs;
          auto const b_elems = b.elements();
          auto const b_sg    = restrict_to(s, b);
          auto const sep_b   = mode == Remark5Mode::Ambient
                                   ? separator(s, b)
                                   : lift(s, separator(b_sg, b_sg.full()),
                                          b_elems);
          for (auto const& local :
               enumerate_homomorphisms(a_sg, b_sg, true)) {
            ++out.maps;
            // φ as a partial map on s, defined on A.
            std::vector<Element> map;
            std::vector<Element> full_map(s.order(), 0);
            for (std::size_t i = 0; i < a_elems.size(); ++i) {
              map.push_back(b_elems[local(i)]);
              full_map[a_elems[i]] = b_elems[local(i)];
            }
            auto apply = [&](SubsetMask const& x) {
              std::uint64_t bits = 0;
              for (auto e : x.elements()) {
                bits |= std::uint64_t{1} << full_map[e];
              }
              return SubsetMask(s.order(), bits);
            };
            auto const lhs = apply(sep_a);
            if (lhs != sep_b) {
              ++out.witnesses_total;
              if (out.witnesses.size() < st.max_witnesses) {
                out.witnesses.push_back({index, a, b, map, lhs, sep_b});
              }
              if (st.stop_at_first) {
                st.done = true;
                return;
              }
            }
            if (mode != Remark5Mode::Ambient) {
              continue;
            }
            // Sep A = φ⁻¹(Sep B), with the preimage taken inside A.
            std::uint64_t pre = 0;
            for (auto e : a_elems) {
              if (sep_b.contains(full_map[e])) {
                pre |= std::uint64_t{1} << e;
              }
            }
            if (sep_a.bits() != pre) {
              continue;
            }
            ++out.claim2_applicable;
            auto const sepsep_a = separator(s, sep_a);
            auto const sepsep_b = separator(s, sep_b);
            if (!sepsep_a.subset_of(a)) {
              ++out.claim2_undefined;
              continue;
            }
            auto const img = apply(sepsep_a);
            if (img == sepsep_b) {
              ++out.claim2_confirmed;
            } else if (out.claim2_refutations.size() < st.max_witnesses) {
              out.claim2_refutations.push_back(
                  {index, a, b, map, img, sepsep_b});
            }
          }
        }
      }
    }

  }  // namespace

  Remark5Survey remark5_survey(std::vector<Semigroup> const& corpus,
                               Remark5Mode                   mode,
                               std::size_t                   max_witnesses) {
    Remark5Survey out;
    SurveyState   st{out, max_witnesses, false};
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      survey_one(corpus[i], i, mode, st);
    }
    return out;
  }

  std::optional<Remark5Witness> search_remark5_witness(
      std::vector<Semigroup> const& corpus, Remark5Mode mode) {
    Remark5Survey out;
    SurveyState   st{out, 1, true};
    for (std::size_t i = 0; i < corpus.size() && !st.done; ++i) {
      survey_one(corpus[i], i, mode, st);
    }
    if (out.witnesses.empty()) {
      return std::nullopt;
    }
    return out.witnesses.front();
  }

}  // namespace sepsg

#include "sepsg/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sepsg {

  std::vector<Semigroup> exhaustive_scan(std::size_t n) {
    if (n == 0 || n > 3) {
      raise(ErrorCode::OrderTooLarge,
            "exhaustive scan supports orders 1 to 3, got " + std::to_string(n));
    }
    std::size_t const    cells = n * n;
    std::vector<Element> table(cells, 0);
    std::vector<Semigroup> out;
    while (true) {
      if (!check_associativity(n, table)) {
        out.push_back(Semigroup::from_table(n, table));
      }
      // Odometer increment, last cell fastest, so tables come out sorted.
      std::size_t i = cells;
      while (i > 0 && table[i - 1] + 1u == n) {
        table[--i] = 0;
      }
      if (i == 0) {
        break;
      }
      ++table[i - 1];
    }
    return out;
  }

  namespace {

    class Enumerator {
     public:
      explicit Enumerator(std::size_t n)
          : _n(n), _table(n * n, kUnset) {}

      std::vector<Semigroup> run() {
        fill(0);
        return std::move(_found);
      }

     private:
      static constexpr Element kUnset = 0xFF;

      Element at(std::size_t x, std::size_t y) const {
        return _table[x * _n + y];
      }

      // Checks every triple that reads the cell just set, where all the
      // cells it reads are known.
      bool consistent(std::size_t cell) const {
        std::size_t const r = cell / _n;
        std::size_t const c = cell % _n;
        for (std::size_t x = 0; x < _n; ++x) {
          for (std::size_t y = 0; y < _n; ++y) {
            Element const xy = at(x, y);
            if (xy == kUnset) {
              continue;
            }
            for (std::size_t z = 0; z < _n; ++z) {
              Element const yz = at(y, z);
              if (yz == kUnset) {
                continue;
              }
              Element const lhs = at(xy, z);
              Element const rhs = at(x, yz);
              if (lhs == kUnset || rhs == kUnset) {
                continue;
              }
              bool const touches = (x == r && y == c) || (y == r && z == c)
                                   || (xy == r && z == c)
                                   || (x == r && yz == c);
              if (touches && lhs != rhs) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void fill(std::size_t cell) {
        if (cell == _table.size()) {
          _found.push_back(Semigroup::from_table(_n, _table));
          return;
        }
        for (std::size_t v = 0; v < _n; ++v) {
          _table[cell] = static_cast<Element>(v);
          if (consistent(cell)) {
            fill(cell + 1);
          }
        }
        _table[cell] = kUnset;
      }

      std::size_t            _n;
      std::vector<Element>   _table;
      std::vector<Semigroup> _found;
    };

  }  // namespace

  std::vector<Semigroup> enumerate_semigroups(std::size_t n) {
    if (n == 0 || n > kMaxEnumerationOrder) {
      raise(ErrorCode::OrderTooLarge,
            "semigroup enumeration supports orders 1 to "
                + std::to_string(kMaxEnumerationOrder) + ", got "
                + std::to_string(n));
    }
    return Enumerator(n).run();
  }

  Semigroup relabel(Semigroup const& s, std::vector<Element> const& perm) {
    std::size_t const n = s.order();
    if (perm.size() != n) {
      raise(ErrorCode::InvalidArgument, "permutation has the wrong length");
    }
    std::vector<Element> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        table[perm[x] * n + perm[y]] = perm[s.product(x, y)];
      }
    }
    return Semigroup::from_table(n, std::move(table));
  }

  Semigroup transpose(Semigroup const& s) {
    std::size_t const    n = s.order();
    std::vector<Element> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        table[x * n + y] = s.product(y, x);
      }
    }
    return Semigroup::from_table(n, std::move(table), s.names());
  }

  std::vector<Element> canonicalize(Semigroup const& s, bool include_anti) {
    std::size_t const n = s.order();
    if (n > kMaxCanonicalOrder) {
      raise(ErrorCode::OrderTooLarge,
            "canonical forms need order <= "
                + std::to_string(kMaxCanonicalOrder));
    }
    std::vector<Semigroup const*> sources{&s};
    Semigroup const               anti = transpose(s);
    if (include_anti) {
      sources.push_back(&anti);
    }
    std::vector<Element> best;
    std::vector<Element> perm(n);
    std::vector<Element> candidate(n * n);
    for (auto const* src : sources) {
      std::iota(perm.begin(), perm.end(), Element{0});
      do {
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            candidate[perm[x] * n + perm[y]] = perm[src->product(x, y)];
          }
        }
        if (best.empty() || candidate < best) {
          best = candidate;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return best;
  }

  Dedupe parse_dedupe(std::string_view text) {
    if (text.empty() || text == "none") {
      return Dedupe::None;
    }
    if (text == "iso") {
      return Dedupe::Iso;
    }
    if (text == "iso-anti") {
      return Dedupe::IsoAnti;
    }
    raise(ErrorCode::InvalidArgument,
          "unknown dedupe mode '" + std::string(text)
              + "' (expected none, iso or iso-anti)");
  }

  std::vector<Semigroup> dedupe(std::vector<Semigroup> const& corpus,
                                Dedupe                        mode) {
    if (mode == Dedupe::None) {
      return corpus;
    }
    std::set<std::vector<Element>> seen;
    std::vector<Semigroup>         out;
    for (auto const& s : corpus) {
      if (seen.insert(canonicalize(s, mode == Dedupe::IsoAnti)).second) {
        out.push_back(s);
      }
    }
    return out;
  }

}  // namespace sepsg

#ifndef SEPSG_TESTS_ORACLES_HPP_
#define SEPSG_TESTS_ORACLES_HPP_

// Brute-force reference implementations. They follow the definitions
// literally, share no code with the library beyond the table accessors, and
// are only meant for tiny inputs.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sepsg/freewords.hpp"
#include "sepsg/semigroup.hpp"

namespace oracle {

  using sepsg::Element;
  using sepsg::Semigroup;
  using sepsg::SubsetMask;

  inline bool in(std::uint64_t bits, std::size_t x) {
    return (bits >> x) & 1U;
  }

  inline std::uint64_t full(std::size_t n) {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  inline std::optional<sepsg::Triple> associativity(
      std::size_t n, std::vector<Element> const& t) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]) {
            return sepsg::Triple{static_cast<Element>(x),
                                 static_cast<Element>(y),
                                 static_cast<Element>(z)};
          }
        }
      }
    }
    return std::nullopt;
  }

  inline std::uint64_t product(Semigroup const& s, std::uint64_t a,
                               std::uint64_t b) {
    std::uint64_t out = 0;
    for (std::size_t x = 0; x < s.order(); ++x) {
      for (std::size_t y = 0; y < s.order(); ++y) {
        if (in(a, x) && in(b, y)) {
          out |= std::uint64_t{1} << s.product(x, y);
        }
      }
    }
    return out;
  }

  inline bool closed(Semigroup const& s, std::uint64_t a) {
    return a != 0 && (product(s, a, a) & ~a) == 0;
  }

  // {x : xA ⊆ A and Ax ⊆ A}
  inline std::uint64_t idealizer(Semigroup const& s, std::uint64_t a) {
    std::uint64_t out = 0;
    for (std::size_t x = 0; x < s.order(); ++x) {
      bool ok = true;
      for (std::size_t y = 0; y < s.order() && ok; ++y) {
        if (in(a, y)) {
          ok = in(a, s.product(x, y)) && in(a, s.product(y, x));
        }
      }
      if (ok) {
        out |= std::uint64_t{1} << x;
      }
    }
    return out;
  }

  inline std::uint64_t separator(Semigroup const& s, std::uint64_t a) {
    return idealizer(s, a) & idealizer(s, full(s.order()) & ~a);
  }

  inline bool ideal(Semigroup const& s, std::uint64_t r) {
    if (r == 0) {
      return false;
    }
    for (std::size_t x = 0; x < s.order(); ++x) {
      for (std::size_t y = 0; y < s.order(); ++y) {
        if (in(r, y) && (!in(r, s.product(x, y)) || !in(r, s.product(y, x)))) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool prime(Semigroup const& s, std::uint64_t p) {
    if (!ideal(s, p) || p == full(s.order())) {
      return false;
    }
    for (std::size_t x = 0; x < s.order(); ++x) {
      for (std::size_t y = 0; y < s.order(); ++y) {
        if (in(p, s.product(x, y)) && !in(p, x) && !in(p, y)) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool maximal_ideal(Semigroup const& s, std::uint64_t m) {
    auto const f = full(s.order());
    if (!ideal(s, m) || m == f) {
      return false;
    }
    for (std::uint64_t a = 1; a < f; ++a) {
      if ((a & m) == m && a != m && ideal(s, a)) {
        return false;
      }
    }
    return true;
  }

  inline bool maximal_subsemigroup(Semigroup const& s, std::uint64_t m) {
    auto const f = full(s.order());
    for (std::uint64_t a = 1; a < f; ++a) {
      if ((a & m) == m && a != m && closed(s, a)) {
        return false;
      }
    }
    return m != f;
  }

  inline bool unitary(Semigroup const& s, std::uint64_t u) {
    for (std::size_t x = 0; x < s.order(); ++x) {
      for (std::size_t y = 0; y < s.order(); ++y) {
        if (!in(u, s.product(x, y))) {
          continue;
        }
        if (in(u, x) && !in(u, y)) {
          return false;
        }
        if (in(u, y) && !in(u, x)) {
          return false;
        }
      }
    }
    return true;
  }

  // Every map S -> S that is multiplicative, by scanning all n^n maps.
  inline std::vector<std::vector<Element>> endomorphisms(Semigroup const& s) {
    auto const                        n = s.order();
    std::vector<std::vector<Element>> out;
    std::vector<Element>              map(n, 0);
    while (true) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) {
        for (std::size_t y = 0; y < n && ok; ++y) {
          ok = map[s.product(x, y)] == s.product(map[x], map[y]);
        }
      }
      if (ok) {
        out.push_back(map);
      }
      std::size_t i = n;
      while (i > 0 && map[i - 1] + 1u == n) {
        map[--i] = 0;
      }
      if (i == 0) {
        return out;
      }
      ++map[i - 1];
    }
  }

  // Words are plain strings over 'a', 'b', ...; generators likewise.

  // All concatenations of generators of total length <= max_len, counted
  // per resulting word. Two sequences spelling the same word count twice.
  inline std::map<std::string, std::size_t> concatenations(
      std::vector<std::string> const& gens, std::size_t max_len) {
    std::map<std::string, std::size_t> counts;
    std::vector<std::string>           frontier = {""};
    while (!frontier.empty()) {
      std::vector<std::string> next;
      for (auto const& w : frontier) {
        for (auto const& g : gens) {
          if (w.size() + g.size() <= max_len) {
            ++counts[w + g];
            next.push_back(w + g);
          }
        }
      }
      frontier = std::move(next);
    }
    return counts;
  }

  inline bool ambiguous_up_to(std::vector<std::string> const& gens,
                              std::size_t                     max_len) {
    for (auto const& [w, c] : concatenations(gens, max_len)) {
      if (c > 1) {
        return true;
      }
    }
    return false;
  }

  // Every binary word of length 1..max_len.
  inline std::vector<std::string> binary_words(std::size_t max_len) {
    std::vector<std::string> out;
    for (std::size_t len = 1; len <= max_len; ++len) {
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
        std::string w;
        for (std::size_t i = 0; i < len; ++i) {
          w += static_cast<char>('a' + ((v >> (len - 1 - i)) & 1U));
        }
        out.push_back(w);
      }
    }
    return out;
  }

  // All sets of 1..max_gens distinct binary words of length <= max_len.
  inline std::vector<std::vector<std::string>> small_generator_sets(
      std::size_t max_gens, std::size_t max_len) {
    auto const                            words = binary_words(max_len);
    std::vector<std::vector<std::string>> out;
    std::vector<std::string>              cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (!cur.empty()) {
        out.push_back(cur);
      }
      if (cur.size() == max_gens) {
        return;
      }
      for (std::size_t i = start; i < words.size(); ++i) {
        cur.push_back(words[i]);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  }

  inline std::string join(std::vector<std::string> const& gens) {
    std::string out;
    for (auto const& g : gens) {
      out += (out.empty() ? "" : ",") + g;
    }
    return out;
  }

}  // namespace oracle

#endif  // SEPSG_TESTS_ORACLES_HPP_

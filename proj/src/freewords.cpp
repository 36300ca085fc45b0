#include "sepsg/freewords.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <set>

namespace sepsg {

  namespace {

    using Letters = std::vector<Letter>;

    constexpr std::size_t kMaxWordsEnumerated = std::size_t{1} << 24;

    bool has_prefix(Letters const& w, std::size_t pos, Letters const& p) {
      return w.size() - pos >= p.size()
             && std::equal(p.begin(), p.end(), w.begin() + pos);
    }

    void check_alphabet(Word const& w, GeneratorSet const& g) {
      if (w.max_letter() >= g.alphabet_size()) {
        raise(ErrorCode::AlphabetMismatch,
              "word '" + w.str() + "' uses letters outside the alphabet of "
                  + std::to_string(g.alphabet_size()) + " letters");
      }
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  std::string letter_name(Letter x) {
    if (x < 26) {
      return std::string(1, static_cast<char>('a' + x));
    }
    return "[" + std::to_string(x) + "]";
  }

  Word::Word(std::vector<Letter> letters) : _letters(std::move(letters)) {
    if (_letters.empty()) {
      raise(ErrorCode::MalformedInput, "words must be non-empty");
    }
  }

  Word Word::parse(std::string_view text) {
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c >= 'a' && c <= 'z') {
        letters.push_back(static_cast<Letter>(c - 'a'));
      } else if (c == '[') {
        auto close = text.find(']', i);
        if (close == std::string_view::npos) {
          raise(ErrorCode::MalformedInput,
                "unterminated '[' in word '" + std::string(text) + "'");
        }
        Letter v       = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i + 1,
                                         text.data() + close, v);
        if (ec != std::errc() || ptr != text.data() + close) {
          raise(ErrorCode::MalformedInput,
                "bad bracketed letter in word '" + std::string(text) + "'");
        }
        letters.push_back(v);
        i = close;
      } else {
        raise(ErrorCode::MalformedInput,
              "unexpected character '" + std::string(1, c) + "' in word '"
                  + std::string(text) + "'");
      }
    }
    return Word(std::move(letters));
  }

  Letter Word::max_letter() const {
    return *std::max_element(_letters.begin(), _letters.end());
  }

  std::string Word::str() const {
    std::string out;
    for (auto x : _letters) {
      out += letter_name(x);
    }
    return out;
  }

  Word Word::operator+(Word const& other) const {
    Letters out = _letters;
    out.insert(out.end(), other._letters.begin(), other._letters.end());
    return Word(std::move(out));
  }

  bool Word::starts_with(Word const& prefix) const {
    return has_prefix(_letters, 0, prefix._letters);
  }

  std::strong_ordering Word::operator<=>(Word const& other) const {
    if (auto c = _letters.size() <=> other._letters.size(); c != 0) {
      return c;
    }
    return _letters <=> other._letters;
  }

  ////////////////////////////////////////////////////////////////////////
  // GeneratorSet
  ////////////////////////////////////////////////////////////////////////

  GeneratorSet::GeneratorSet(std::size_t k, std::vector<Word> gens)
      : _k(k), _gens(std::move(gens)) {
    if (_k == 0) {
      raise(ErrorCode::InvalidArgument, "alphabet size must be positive");
    }
    if (_gens.empty()) {
      raise(ErrorCode::MalformedInput, "generator set must be non-empty");
    }
    for (auto const& w : _gens) {
      if (w.max_letter() >= _k) {
        raise(ErrorCode::AlphabetMismatch,
              "generator '" + w.str() + "' uses letters outside the alphabet "
                  "of " + std::to_string(_k) + " letters");
      }
    }
    std::sort(_gens.begin(), _gens.end());
    auto dup = std::adjacent_find(_gens.begin(), _gens.end());
    if (dup != _gens.end()) {
      raise(ErrorCode::MalformedInput,
            "duplicate generator '" + dup->str() + "'");
    }
  }

  GeneratorSet GeneratorSet::parse(std::string_view list,
                                   std::size_t      alphabet_size) {
    auto b = list.find_first_not_of(" \t{");
    auto e = list.find_last_not_of(" \t}\r\n");
    if (b == std::string_view::npos || e < b) {
      raise(ErrorCode::MalformedInput, "empty generator list");
    }
    list = list.substr(b, e - b + 1);
    std::vector<Word> gens;
    std::size_t       start = 0;
    while (true) {
      auto comma = list.find(',', start);
      auto tok   = list.substr(start, comma == std::string_view::npos
                                        ? std::string_view::npos
                                        : comma - start);
      auto tb    = tok.find_first_not_of(" \t");
      if (tb == std::string_view::npos) {
        raise(ErrorCode::MalformedInput, "empty word in generator list");
      }
      auto te = tok.find_last_not_of(" \t");
      gens.push_back(Word::parse(tok.substr(tb, te - tb + 1)));
      if (comma == std::string_view::npos) {
        break;
      }
      start = comma + 1;
    }
    if (alphabet_size == 0) {
      Letter top = 0;
      for (auto const& w : gens) {
        top = std::max(top, w.max_letter());
      }
      alphabet_size = top + 1;
    }
    return GeneratorSet(alphabet_size, std::move(gens));
  }

  std::size_t GeneratorSet::max_length() const {
    std::size_t m = 0;
    for (auto const& w : _gens) {
      m = std::max(m, w.length());
    }
    return m;
  }

  std::string GeneratorSet::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < _gens.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += _gens[i].str();
    }
    return out + "}";
  }

  ////////////////////////////////////////////////////////////////////////
  // Factorization
  ////////////////////////////////////////////////////////////////////////

  BigCount count_factorizations(Word const& w, GeneratorSet const& g,
                                std::size_t max_length) {
    check_alphabet(w, g);
    if (w.length() > max_length) {
      raise(ErrorCode::InvalidArgument,
            "word length " + std::to_string(w.length())
                + " exceeds the factorization limit "
                + std::to_string(max_length));
    }
    auto const&           letters = w.letters();
    std::size_t const     n       = letters.size();
    // ways[i]: factorizations of the prefix of length i.
    std::vector<BigCount> ways(n + 1);
    ways[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (ways[i] == 0) {
        continue;
      }
      for (auto const& gen : g.words()) {
        if (has_prefix(letters, i, gen.letters())) {
          ways[i + gen.length()] += ways[i];
        }
      }
    }
    return ways[n];
  }

  std::vector<std::vector<std::size_t>> list_factorizations(
      Word const& w, GeneratorSet const& g, std::size_t limit) {
    check_alphabet(w, g);
    auto const&                           letters = w.letters();
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              path;
    // reachable[i]: the suffix from i can be factored.
    std::vector<bool> reachable(letters.size() + 1, false);
    reachable[letters.size()] = true;
    for (std::size_t i = letters.size(); i-- > 0;) {
      for (auto const& gen : g.words()) {
        if (has_prefix(letters, i, gen.letters())
            && reachable[i + gen.length()]) {
          reachable[i] = true;
          break;
        }
      }
    }
    auto dfs = [&](auto&& self, std::size_t pos) -> void {
      if (out.size() >= limit) {
        return;
      }
      if (pos == letters.size()) {
        out.push_back(path);
        return;
      }
      for (std::size_t j = 0; j < g.size(); ++j) {
        auto const& gen = g.words()[j].letters();
        if (has_prefix(letters, pos, gen) && reachable[pos + gen.size()]) {
          path.push_back(j);
          self(self, pos + gen.size());
          path.pop_back();
        }
      }
    };
    dfs(dfs, 0);
    return out;
  }

  namespace {
    // Longest factorization of each prefix, -1 where none exists.
    std::vector<int> max_factors(Letters const& letters, GeneratorSet const& g) {
      std::vector<int> best(letters.size() + 1, -1);
      best[0] = 0;
      for (std::size_t i = 0; i < letters.size(); ++i) {
        if (best[i] < 0) {
          continue;
        }
        for (auto const& gen : g.words()) {
          if (has_prefix(letters, i, gen.letters())) {
            auto& slot = best[i + gen.length()];
            slot       = std::max(slot, best[i] + 1);
          }
        }
      }
      return best;
    }

    bool member_letters(Letters const& letters, GeneratorSet const& g) {
      std::vector<char> ok(letters.size() + 1, 0);
      ok[0] = 1;
      for (std::size_t i = 0; i < letters.size(); ++i) {
        if (!ok[i]) {
          continue;
        }
        for (auto const& gen : g.words()) {
          if (has_prefix(letters, i, gen.letters())) {
            ok[i + gen.length()] = 1;
          }
        }
      }
      return ok.back() != 0;
    }

    bool member_concat(Letters const& x, Letters const& y,
                       GeneratorSet const& g, Letters& scratch) {
      scratch.assign(x.begin(), x.end());
      scratch.insert(scratch.end(), y.begin(), y.end());
      return member_letters(scratch, g);
    }
  }  // namespace

  bool member(Word const& w, GeneratorSet const& g) {
    check_alphabet(w, g);
    return member_letters(w.letters(), g);
  }

  std::size_t max_factor_count(Word const& w, GeneratorSet const& g) {
    check_alphabet(w, g);
    int best = max_factors(w.letters(), g).back();
    return best < 0 ? 0 : static_cast<std::size_t>(best);
  }

  GeneratorSet base(GeneratorSet const& g) {
    std::vector<Word> kept;
    for (auto const& w : g.words()) {
      // The one-factor factorization is always counted.
      if (count_factorizations(w, g, w.length()) == 1) {
        kept.push_back(w);
      }
    }
    return GeneratorSet(g.alphabet_size(), std::move(kept));
  }

  ////////////////////////////////////////////////////////////////////////
  // Sardinas-Patterson
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // X⁻¹Y = {w : xw ∈ Y for some x ∈ X}, possibly containing the empty
    // word.
    void left_quotient(std::set<Letters> const& xs, std::set<Letters> const& ys,
                       std::set<Letters>& out) {
      for (auto const& x : xs) {
        for (auto const& y : ys) {
          if (has_prefix(y, 0, x)) {
            out.emplace(y.begin() + x.size(), y.end());
          }
        }
      }
    }

    bool residuals_say_code(GeneratorSet const& g) {
      std::set<Letters> gens;
      for (auto const& w : g.words()) {
        gens.insert(w.letters());
      }
      std::set<Letters> u;
      left_quotient(gens, gens, u);
      u.erase(Letters{});  // x⁻¹x for each generator
      std::set<std::set<Letters>> seen;
      while (!u.empty()) {
        std::set<Letters> next;
        left_quotient(u, gens, next);
        left_quotient(gens, u, next);
        if (next.contains(Letters{})) {
          return false;
        }
        if (!seen.insert(u).second) {
          return true;
        }
        u = std::move(next);
      }
      return true;
    }

    // Breadth-first search over dangling suffixes. Each state keeps two
    // factorization prefixes whose concatenations differ by `dangling`,
    // with `behind` being the shorter one.
    std::optional<Ambiguity> find_ambiguity(GeneratorSet const& g) {
      struct State {
        Letters                  dangling;
        std::vector<std::size_t> behind, ahead;
      };
      auto const&       gens = g.words();
      std::deque<State> queue;
      std::set<Letters> visited;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = 0; j < gens.size(); ++j) {
          auto const& x = gens[i].letters();
          auto const& y = gens[j].letters();
          if (i != j && has_prefix(y, 0, x)) {
            Letters d(y.begin() + x.size(), y.end());
            if (visited.insert(d).second) {
              queue.push_back({std::move(d), {i}, {j}});
            }
          }
        }
      }
      auto concat = [&](std::vector<std::size_t> const& idx) {
        Letters out;
        for (auto k : idx) {
          auto const& l = gens[k].letters();
          out.insert(out.end(), l.begin(), l.end());
        }
        return out;
      };
      while (!queue.empty()) {
        State st = std::move(queue.front());
        queue.pop_front();
        for (std::size_t k = 0; k < gens.size(); ++k) {
          auto const& x      = gens[k].letters();
          auto        behind = st.behind;
          behind.push_back(k);
          if (x == st.dangling) {
            return Ambiguity{Word(concat(behind)), std::move(behind),
                             st.ahead};
          }
          if (has_prefix(st.dangling, 0, x)) {
            Letters d(st.dangling.begin() + x.size(), st.dangling.end());
            if (visited.insert(d).second) {
              queue.push_back({std::move(d), std::move(behind), st.ahead});
            }
          } else if (has_prefix(x, 0, st.dangling)) {
            Letters d(x.begin() + st.dangling.size(), x.end());
            if (visited.insert(d).second) {
              queue.push_back({std::move(d), st.ahead, std::move(behind)});
            }
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  CodeResult is_code(GeneratorSet const& g) {
    bool const code    = residuals_say_code(g);
    auto       witness = find_ambiguity(g);
    if (code == witness.has_value()) {
      raise(ErrorCode::Internal,
            "residual iteration and ambiguity search "
            "disagree on " + g.str());
    }
    if (witness) {
      // Report the two factorizations in a canonical order.
      if (witness->second < witness->first) {
        std::swap(witness->first, witness->second);
      }
    }
    return {code, std::move(witness)};
  }

  bool is_free_subsemigroup(GeneratorSet const& g) {
    return is_code(base(g)).is_code;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bounded checks
  ////////////////////////////////////////////////////////////////////////

  std::vector<Word> all_words(std::size_t k, std::size_t max_length) {
    std::size_t total = 0;
    std::size_t layer = 1;
    for (std::size_t len = 1; len <= max_length; ++len) {
      if (layer > kMaxWordsEnumerated / k) {
        raise(ErrorCode::InvalidArgument,
              "too many words to enumerate (alphabet "
                  + std::to_string(k) + ", length "
                  + std::to_string(max_length) + ")");
      }
      layer *= k;
      total += layer;
      if (total > kMaxWordsEnumerated) {
        raise(ErrorCode::InvalidArgument, "too many words to enumerate");
      }
    }
    std::vector<Word> out;
    out.reserve(total);
    Letters cur;
    for (std::size_t len = 1; len <= max_length; ++len) {
      cur.assign(len, 0);
      while (true) {
        out.emplace_back(cur);
        std::size_t i = len;
        while (i > 0 && cur[i - 1] + 1 == k) {
          cur[--i] = 0;
        }
        if (i == 0) {
          break;
        }
        ++cur[i - 1];
      }
    }
    return out;
  }

  std::vector<Word> members_up_to(GeneratorSet const& g,
                                  std::size_t         max_length) {
    std::set<Word>   found;
    std::deque<Word> frontier;
    for (auto const& w : g.words()) {
      if (w.length() <= max_length && found.insert(w).second) {
        frontier.push_back(w);
      }
    }
    while (!frontier.empty()) {
      Word w = std::move(frontier.front());
      frontier.pop_front();
      for (auto const& gen : g.words()) {
        if (w.length() + gen.length() <= max_length) {
          Word next = w + gen;
          if (found.insert(next).second) {
            frontier.push_back(std::move(next));
          }
        }
      }
    }
    return {found.begin(), found.end()};
  }

  StabilityResult bounded_stability_check(GeneratorSet const& g,
                                          std::size_t         bound) {
    if (bound < g.max_length()) {
      raise(ErrorCode::InvalidArgument,
            "stability bound must be at least the longest generator length "
                + std::to_string(g.max_length()));
    }
    StabilityResult result;
    result.bound = bound;
    result.free  = is_free_subsemigroup(g);
    auto const members = members_up_to(g, 2 * bound);
    Letters    scratch;
    for (auto const& s : all_words(g.alphabet_size(), bound)) {
      ++result.words_checked;
      if (member_letters(s.letters(), g)) {
        continue;
      }
      std::optional<Word> t1, t2;
      for (auto const& t : members) {
        if (s.length() + t.length() > 2 * bound) {
          break;  // members are sorted by length
        }
        if (!t1 && member_concat(s.letters(), t.letters(), g, scratch)) {
          t1 = t;
        }
        if (!t2 && member_concat(t.letters(), s.letters(), g, scratch)) {
          t2 = t;
        }
        if (t1 && t2) {
          result.counterexample = StabilityCounterexample{s, *t1, *t2};
          return result;
        }
      }
    }
    return result;
  }

  BoundedSepResult bounded_separator(GeneratorSet const& g,
                                     std::size_t         length_bound,
                                     std::size_t         depth) {
    if (length_bound == 0 || depth == 0) {
      raise(ErrorCode::InvalidArgument,
            "length bound and depth must be positive");
    }
    BoundedSepResult result{length_bound, depth, {}};
    auto const       partners = all_words(g.alphabet_size(), depth);
    std::vector<char> partner_in_t;
    partner_in_t.reserve(partners.size());
    for (auto const& t : partners) {
      partner_in_t.push_back(member_letters(t.letters(), g) ? 1 : 0);
    }
    Letters scratch;
    for (auto const& s : all_words(g.alphabet_size(), length_bound)) {
      bool ok = true;
      for (std::size_t i = 0; i < partners.size() && ok; ++i) {
        bool const in_t = partner_in_t[i] != 0;
        auto const& t   = partners[i].letters();
        ok = member_concat(s.letters(), t, g, scratch) == in_t
             && member_concat(t, s.letters(), g, scratch) == in_t;
      }
      if (ok) {
        result.candidates.push_back({s, depth});
      }
    }
    return result;
  }

  Theorem13Result check_theorem13_condition(GeneratorSet const& g,
                                            std::size_t         bound) {
    if (bound == 0) {
      raise(ErrorCode::InvalidArgument, "bound must be positive");
    }
    if (!is_free_subsemigroup(g)) {
      raise(ErrorCode::NotFree, g.str() + " does not generate a free "
                                          "subsemigroup");
    }
    Theorem13Result result;
    result.bound = bound;
    Letters scratch;
    if (bound >= 3) {
      auto const words = all_words(g.alphabet_size(), bound - 2);
      for (auto const& t : members_up_to(g, (bound - 1) / 2)) {
        for (auto const& s : words) {
          if (2 * t.length() + s.length() > bound) {
            break;
          }
          ++result.instances;
          Word const tst = t + s + t;
          if (!member_letters(tst.letters(), g)) {
            continue;
          }
          bool const ts = member_concat(t.letters(), s.letters(), g, scratch);
          bool const st = member_concat(s.letters(), t.letters(), g, scratch);
          if ((!ts || !st) && !result.violation) {
            result.violation = Theorem13Violation{t, s, ts, st};
          }
        }
      }
    }
    std::size_t const half = std::max<std::size_t>(1, bound / 2);
    result.separator       = bounded_separator(g, half, bound);
    std::set<Word> cands;
    for (auto const& c : result.separator.candidates) {
      cands.insert(c.word);
      if (!member_letters(c.word.letters(), g)) {
        result.candidates_outside_t.push_back(c.word);
      }
    }
    for (auto const& t : members_up_to(g, half)) {
      if (!cands.contains(t)) {
        result.members_not_candidates.push_back(t);
      }
    }
    return result;
  }

  Theorem14Report check_theorem14(GeneratorSet const& g, std::size_t power,
                                  std::size_t bound) {
    if (power == 0 || bound == 0) {
      raise(ErrorCode::InvalidArgument, "power and bound must be positive");
    }
    Theorem14Report report;
    report.power = power;
    report.bound = bound;
    report.free  = is_free_subsemigroup(g);
    auto const     sep = bounded_separator(g, bound, bound);
    std::set<Word> cands;
    for (auto const& c : sep.candidates) {
      cands.insert(c.word);
    }
    for (auto const& w : members_up_to(g, bound)) {
      if (max_factor_count(w, g) < power) {
        continue;
      }
      ++report.power_words;
      if (!cands.contains(w)) {
        report.power_words_outside_separator.push_back(w);
      }
    }
    return report;
  }

}  // namespace sepsg

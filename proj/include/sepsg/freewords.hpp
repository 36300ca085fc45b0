#ifndef SEPSG_FREEWORDS_HPP_
#define SEPSG_FREEWORDS_HPP_

// Words over a finite alphabet and finitely generated subsemigroups of the
// free semigroup. Letters are indices in [0, k); they print as 'a', 'b', ...
// for the first 26 and as bracketed numerals ("[26]") beyond that.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sepsg/error.hpp"

namespace sepsg {

  using Letter = std::uint32_t;
  using BigCount = boost::multiprecision::cpp_int;

  //! A non-empty word. Ordered by length, then lexicographically.
  class Word {
   public:
    explicit Word(std::vector<Letter> letters);

    static Word parse(std::string_view text);

    std::size_t length() const noexcept { return _letters.size(); }
    std::vector<Letter> const& letters() const noexcept { return _letters; }
    Letter max_letter() const;

    std::string str() const;

    Word operator+(Word const& other) const;

    bool starts_with(Word const& prefix) const;

    bool operator==(Word const&) const = default;
    std::strong_ordering operator<=>(Word const& other) const;

   private:
    std::vector<Letter> _letters;
  };

  std::string letter_name(Letter x);

  //! A finite set of distinct words over an alphabet of size k. Stored in
  //! (length, lex) order; a generator index refers to that order.
  class GeneratorSet {
   public:
    GeneratorSet(std::size_t alphabet_size, std::vector<Word> gens);

    //! Parses "w1,w2,...". With alphabet_size = 0 the size is one more than
    //! the largest letter used.
    static GeneratorSet parse(std::string_view list,
                              std::size_t      alphabet_size = 0);

    std::size_t alphabet_size() const noexcept { return _k; }
    std::vector<Word> const& words() const noexcept { return _gens; }
    std::size_t size() const noexcept { return _gens.size(); }
    std::size_t max_length() const;

    std::string str() const;

    bool operator==(GeneratorSet const&) const = default;

   private:
    std::size_t       _k;
    std::vector<Word> _gens;
  };

  inline constexpr std::size_t kDefaultMaxWordLength = 64;

  //! Number of tuples (g1, ..., gm), m >= 1, of generators with
  //! g1...gm = w. Throws AlphabetMismatch, and InvalidArgument for words
  //! longer than max_length.
  BigCount count_factorizations(Word const& w, GeneratorSet const& g,
                                std::size_t max_length
                                = kDefaultMaxWordLength);

  //! Up to `limit` factorizations as generator index sequences, in
  //! lexicographic order of the index sequence.
  std::vector<std::vector<std::size_t>> list_factorizations(
      Word const& w, GeneratorSet const& g, std::size_t limit = 64);

  //! w ∈ ⟨G⟩.
  bool member(Word const& w, GeneratorSet const& g);

  //! The largest m such that w is a product of m generators, or 0 if w is
  //! not in ⟨G⟩.
  std::size_t max_factor_count(Word const& w, GeneratorSet const& g);

  //! Generators with no factorization into two or more generators: the
  //! unique minimal generating set of ⟨G⟩.
  GeneratorSet base(GeneratorSet const& g);

  struct Ambiguity {
    Word                     word;
    std::vector<std::size_t> first, second;  // generator indices
  };

  struct CodeResult {
    bool                     is_code;
    std::optional<Ambiguity> witness;  // set iff !is_code
  };

  //! Sardinas-Patterson residual iteration, plus reconstruction of a word
  //! with two distinct factorizations when the set is not a code.
  CodeResult is_code(GeneratorSet const& g);

  //! ⟨G⟩ is free iff base(G) is a code.
  bool is_free_subsemigroup(GeneratorSet const& g);

  //! Every word over the alphabet of size k with length in [1, max_length],
  //! in (length, lex) order.
  std::vector<Word> all_words(std::size_t k, std::size_t max_length);

  //! Members of ⟨G⟩ of length at most max_length, in (length, lex) order.
  std::vector<Word> members_up_to(GeneratorSet const& g,
                                  std::size_t         max_length);

  struct StabilityCounterexample {
    Word s, t1, t2;  // s·t1 ∈ T, t2·s ∈ T, s ∉ T
  };

  struct StabilityResult {
    std::size_t                            bound = 0;
    bool                                   free  = false;
    std::size_t                            words_checked = 0;
    std::optional<StabilityCounterexample> counterexample;
    bool pass() const { return !counterexample; }
  };

  //! Searches words s with |s| <= L for which some t1, t2 ∈ T give
  //! s·t1 ∈ T and t2·s ∈ T with |s·t1|, |t2·s| <= 2L, yet s ∉ T. A
  //! counterexample refutes freeness; passing proves nothing. Requires
  //! L >= the longest generator.
  StabilityResult bounded_stability_check(GeneratorSet const& g,
                                          std::size_t         bound);

  struct SeparatorCandidate {
    Word        word;
    std::size_t verified_depth;
  };

  //! Words s with |s| <= L that satisfy all four separator conditions
  //! against every word t with |t| <= D. A superset of the members of
  //! Sep⟨G⟩ up to length L.
  struct BoundedSepResult {
    std::size_t                     length_bound = 0;
    std::size_t                     depth        = 0;
    std::vector<SeparatorCandidate> candidates;
  };

  BoundedSepResult bounded_separator(GeneratorSet const& g,
                                     std::size_t         length_bound,
                                     std::size_t         depth);

  struct Theorem13Violation {
    Word t, s;  // t·s·t ∈ T but t·s ∉ T or s·t ∉ T
    bool ts_member, st_member;
  };

  struct Theorem13Result {
    std::size_t                       bound     = 0;
    std::size_t                       instances = 0;
    std::optional<Theorem13Violation> violation;
    // Cross-check against bounded_separator(G, L/2, L).
    BoundedSepResult                  separator;
    std::vector<Word>                 candidates_outside_t;
    std::vector<Word>                 members_not_candidates;
    bool condition_holds() const { return !violation; }
    //! The condition predicts T = Sep T; true when the bounded separator
    //! agrees with T up to L/2.
    bool prediction_consistent() const {
      return candidates_outside_t.empty() && members_not_candidates.empty();
    }
    bool pass() const {
      return condition_holds() && prediction_consistent();
    }
  };

  //! Throws NotFree if ⟨G⟩ is not free.
  Theorem13Result check_theorem13_condition(GeneratorSet const& g,
                                            std::size_t         bound);

  struct Theorem14Report {
    std::size_t       power = 0;
    std::size_t       bound = 0;
    // Words of A^n with length <= L; the hypothesis is vacuous without any.
    std::size_t       power_words = 0;
    std::vector<Word> power_words_outside_separator;
    bool              free = false;
    bool vacuous() const { return power_words == 0; }
    bool hypothesis_holds() const {
      return power_words_outside_separator.empty();
    }
    //! The conclusion is violated only when non-vacuous hypothesis evidence
    //! survives for a non-free G.
    bool consistent() const {
      return free || vacuous() || !hypothesis_holds();
    }
  };

  Theorem14Report check_theorem14(GeneratorSet const& g, std::size_t power,
                                  std::size_t bound);

}  // namespace sepsg

#endif  // SEPSG_FREEWORDS_HPP_

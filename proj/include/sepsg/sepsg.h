/*
 * sepsg: separators, ideals and free subsemigroups of semigroups.
 *
 * C interface to the sepsg library. Objects are opaque handles created by
 * the *_parse / *_create functions and released with the matching *_free.
 * Every fallible call returns a sepsg_status; on failure a description is
 * available from sepsg_last_error() on the same thread.
 *
 * Subsets of a semigroup of order n are uint64_t bit patterns: bit x set
 * means element x is present. Strings and arrays returned through out
 * parameters are owned by the caller and released with sepsg_free().
 * Structured results are returned as UTF-8 JSON text.
 */

#ifndef SEPSG_SEPSG_H_
#define SEPSG_SEPSG_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SEPSG_BUILDING)
#define SEPSG_API __declspec(dllexport)
#else
#define SEPSG_API __declspec(dllimport)
#endif
#else
#define SEPSG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sepsg_status {
  SEPSG_OK = 0,
  SEPSG_E_MALFORMED_INPUT = 1,
  SEPSG_E_NOT_ASSOCIATIVE = 2,
  SEPSG_E_AMBIENT_MISMATCH = 3,
  SEPSG_E_NOT_A_SUBSEMIGROUP = 4,
  SEPSG_E_EMPTY_SET = 5,
  SEPSG_E_ORDER_TOO_LARGE = 6,
  SEPSG_E_NOT_SURJECTIVE = 7,
  SEPSG_E_ALPHABET_MISMATCH = 8,
  SEPSG_E_NOT_FREE = 9,
  SEPSG_E_UNKNOWN_PROPERTY = 10,
  SEPSG_E_INVALID_ARGUMENT = 11,
  SEPSG_E_TRICHOTOMY_VIOLATION = 12,
  SEPSG_E_INTERNAL = 13
} sepsg_status;

typedef enum sepsg_separator_kind {
  SEPSG_EMPTY_SEPARATOR = 0,
  SEPSG_INCLUDING = 1,
  SEPSG_EXCLUDING = 2
} sepsg_separator_kind;

typedef enum sepsg_dedupe {
  SEPSG_DEDUPE_NONE = 0,
  SEPSG_DEDUPE_ISO = 1,
  SEPSG_DEDUPE_ISO_ANTI = 2
} sepsg_dedupe;

typedef struct sepsg_semigroup sepsg_semigroup;
typedef struct sepsg_corpus    sepsg_corpus;
typedef struct sepsg_gens      sepsg_gens;

/* Message for the last failed call on this thread ("" if none). */
SEPSG_API const char* sepsg_last_error(void);
SEPSG_API const char* sepsg_status_name(sepsg_status status);
SEPSG_API void        sepsg_free(void* ptr);

/* ---- Semigroups ------------------------------------------------------ */

SEPSG_API sepsg_status sepsg_semigroup_parse(const char* text,
                                             sepsg_semigroup** out);
/* Row-major table of n*n entries; entry (x, y) is x*y. */
SEPSG_API sepsg_status sepsg_semigroup_create(uint32_t n,
                                              const uint8_t* table,
                                              sepsg_semigroup** out);
SEPSG_API void     sepsg_semigroup_free(sepsg_semigroup* s);
SEPSG_API uint32_t sepsg_semigroup_order(const sepsg_semigroup* s);
SEPSG_API uint8_t  sepsg_semigroup_product(const sepsg_semigroup* s,
                                           uint32_t x, uint32_t y);
/* Cayley-table text, as accepted by sepsg_semigroup_parse. */
SEPSG_API sepsg_status sepsg_semigroup_format(const sepsg_semigroup* s,
                                              char** out);
/* Writes the least failing triple to witness[0..2] when not associative;
   *associative is 1 otherwise. Entries must be < n. */
SEPSG_API sepsg_status sepsg_check_associativity(uint32_t n,
                                                 const uint8_t* table,
                                                 int* associative,
                                                 uint8_t witness[3]);

SEPSG_API sepsg_status sepsg_subset_parse(const sepsg_semigroup* s,
                                          const char* literal,
                                          uint64_t* out);
SEPSG_API sepsg_status sepsg_subset_format(const sepsg_semigroup* s,
                                           uint64_t subset, char** out);

SEPSG_API sepsg_status sepsg_multiply_subsets(const sepsg_semigroup* s,
                                              uint64_t a, uint64_t b,
                                              uint64_t* out);
SEPSG_API sepsg_status sepsg_power_subset(const sepsg_semigroup* s,
                                          uint64_t a, uint32_t k,
                                          uint64_t* out);
SEPSG_API sepsg_status sepsg_is_subsemigroup(const sepsg_semigroup* s,
                                             uint64_t a, int* out);
SEPSG_API sepsg_status sepsg_closure(const sepsg_semigroup* s, uint64_t a,
                                     uint64_t* out);
/* *found is 0 when there is no identity element. */
SEPSG_API sepsg_status sepsg_identity_element(const sepsg_semigroup* s,
                                              int* found, uint8_t* out);

/* ---- Separators ------------------------------------------------------ */

SEPSG_API sepsg_status sepsg_idealizer(const sepsg_semigroup* s, uint64_t a,
                                       uint64_t* out);
SEPSG_API sepsg_status sepsg_separator(const sepsg_semigroup* s, uint64_t a,
                                       uint64_t* out);
SEPSG_API sepsg_status sepsg_classify(const sepsg_semigroup* s, uint64_t a,
                                      sepsg_separator_kind* out);
/* Non-empty A with Sep A = A, increasing. Release *out with sepsg_free. */
SEPSG_API sepsg_status sepsg_separator_fixed_points(const sepsg_semigroup* s,
                                                    uint64_t** out,
                                                    size_t* count);

/* ---- Ideals ---------------------------------------------------------- */

SEPSG_API sepsg_status sepsg_is_unitary(const sepsg_semigroup* s, uint64_t u,
                                        int* out);
SEPSG_API sepsg_status sepsg_is_ideal(const sepsg_semigroup* s, uint64_t r,
                                      int* out);
SEPSG_API sepsg_status sepsg_is_prime_ideal(const sepsg_semigroup* s,
                                            uint64_t p, int* out);
SEPSG_API sepsg_status sepsg_is_maximal_ideal(const sepsg_semigroup* s,
                                              uint64_t m, int* out);
SEPSG_API sepsg_status sepsg_is_maximal_subsemigroup(const sepsg_semigroup* s,
                                                     uint64_t a, int* out);

typedef enum sepsg_subset_family {
  SEPSG_FAMILY_IDEALS = 0,
  SEPSG_FAMILY_PRIME_IDEALS = 1,
  SEPSG_FAMILY_MAXIMAL_IDEALS = 2,
  SEPSG_FAMILY_UNITARY = 3,
  SEPSG_FAMILY_SUBSEMIGROUPS = 4,
  /* Prime ideals computed through their unitary complements. */
  SEPSG_FAMILY_PRIME_IDEALS_VIA_COMPLEMENT = 5
} sepsg_subset_family;

SEPSG_API sepsg_status sepsg_enumerate_family(const sepsg_semigroup* s,
                                              sepsg_subset_family family,
                                              uint64_t** out, size_t* count);

/* ---- Homomorphisms --------------------------------------------------- */

/* Endomorphisms as count consecutive maps of n entries each. */
SEPSG_API sepsg_status sepsg_endomorphisms(const sepsg_semigroup* s,
                                           int surjective_only,
                                           uint8_t** maps, size_t* count);
SEPSG_API sepsg_status sepsg_image(const sepsg_semigroup* s,
                                   const uint8_t* map, uint64_t a,
                                   uint64_t* out);
SEPSG_API sepsg_status sepsg_preimage(const sepsg_semigroup* s,
                                      const uint8_t* map, uint64_t b,
                                      uint64_t* out);
/* *pass is 1 when every admissible R2 satisfies the transport law. */
SEPSG_API sepsg_status sepsg_check_theorem4(const sepsg_semigroup* s,
                                            const uint8_t* map, int* pass,
                                            char** report_json);
/* relative != 0 computes separators with A and B as ambient semigroups. */
SEPSG_API sepsg_status sepsg_remark5_search(const sepsg_corpus* corpus,
                                            int relative, int* found,
                                            char** report_json);

/* ---- Corpora --------------------------------------------------------- */

SEPSG_API sepsg_status sepsg_corpus_enumerate(uint32_t order,
                                              sepsg_dedupe dedupe,
                                              sepsg_corpus** out);
/* Exhaustive scan of all tables; order <= 3. */
SEPSG_API sepsg_status sepsg_corpus_scan(uint32_t order, sepsg_corpus** out);
/* Every table in a multi-table text stream. */
SEPSG_API sepsg_status sepsg_corpus_parse(const char* text,
                                          sepsg_corpus** out);
SEPSG_API void   sepsg_corpus_free(sepsg_corpus* c);
SEPSG_API size_t sepsg_corpus_size(const sepsg_corpus* c);
/* Borrowed; valid while the corpus lives. */
SEPSG_API const sepsg_semigroup* sepsg_corpus_get(const sepsg_corpus* c,
                                                  size_t index);
SEPSG_API sepsg_status sepsg_canonical_form(const sepsg_semigroup* s,
                                            int include_anti, uint8_t** table,
                                            size_t* size);

/* Runs the property registry. props is a comma-separated id list; NULL or
   "" selects every property. *all_pass is 0 if any property failed. */
SEPSG_API sepsg_status sepsg_verify(const sepsg_corpus* c, const char* props,
                                    const char* corpus_spec, uint64_t seed,
                                    uint32_t jobs, int* all_pass,
                                    char** report_json);
/* JSON array of {id, summary, existence}. */
SEPSG_API sepsg_status sepsg_property_list(char** out_json);

/* ---- Free semigroups ------------------------------------------------- */

/* Comma-separated words; alphabet_size 0 infers it from the letters. */
SEPSG_API sepsg_status sepsg_gens_parse(const char* list,
                                        uint32_t alphabet_size,
                                        sepsg_gens** out);
SEPSG_API void     sepsg_gens_free(sepsg_gens* g);
SEPSG_API uint32_t sepsg_gens_alphabet_size(const sepsg_gens* g);
SEPSG_API sepsg_status sepsg_gens_format(const sepsg_gens* g, char** out);

/* Decimal count of factorizations, plus up to `limit` of them as JSON. */
SEPSG_API sepsg_status sepsg_factorize(const sepsg_gens* g, const char* word,
                                       size_t limit, char** count,
                                       char** factorizations_json);
SEPSG_API sepsg_status sepsg_member(const sepsg_gens* g, const char* word,
                                    int* out);
SEPSG_API sepsg_status sepsg_base(const sepsg_gens* g, sepsg_gens** out);
SEPSG_API sepsg_status sepsg_is_code(const sepsg_gens* g, int* out,
                                     char** report_json);
SEPSG_API sepsg_status sepsg_is_free(const sepsg_gens* g, int* out);
SEPSG_API sepsg_status sepsg_bounded_separator(const sepsg_gens* g,
                                               uint32_t length_bound,
                                               uint32_t depth,
                                               char** report_json);
SEPSG_API sepsg_status sepsg_stability_check(const sepsg_gens* g,
                                             uint32_t bound, int* pass,
                                             char** report_json);
SEPSG_API sepsg_status sepsg_check_theorem13(const sepsg_gens* g,
                                             uint32_t bound, int* pass,
                                             char** report_json);
SEPSG_API sepsg_status sepsg_check_theorem14(const sepsg_gens* g,
                                             uint32_t power, uint32_t bound,
                                             int* consistent,
                                             char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* SEPSG_SEPSG_H_ */

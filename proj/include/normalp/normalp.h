/* C interface to the normalp library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a normalp_status; on failure the message is
 * available from normalp_last_error() on the same thread until the next
 * call. Strings returned through char** are owned by the caller and freed
 * with normalp_string_free.
 */
#ifndef NORMALP_NORMALP_H
#define NORMALP_NORMALP_H

#include <stddef.h>
#include <stdint.h>

#if defined(NORMALP_BUILDING_LIBRARY)
#define NORMALP_API __attribute__((visibility("default")))
#else
#define NORMALP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define NORMALP_ABI_VERSION 1u

typedef enum normalp_status {
  NORMALP_OK = 0,
  NORMALP_E_INVALID_ARGUMENT = 1,
  NORMALP_E_CAP_EXCEEDED = 2,
  NORMALP_E_PRECONDITION = 3,
  NORMALP_E_SINGULAR = 4,
  NORMALP_E_PARSE = 5,
  NORMALP_E_INTERNAL = 6
} normalp_status;

typedef enum normalp_verdict {
  NORMALP_NOT_APPLICABLE = 0,
  NORMALP_P_GROUP = 1,
  NORMALP_FORCED_ALL_GROUPS = 2,
  NORMALP_FORCED_SOLVABLE_ONLY = 3,
  NORMALP_WITNESS_EXISTS = 4,
  NORMALP_UNIQUE_SOLVABLE_WITNESS = 5
} normalp_verdict;

typedef enum normalp_guarantee {
  NORMALP_BURNSIDE_PQ = 0,
  NORMALP_ODD_ORDER = 1,
  NORMALP_GUARANTEE_NONE = 2
} normalp_guarantee;

typedef struct normalp_classification {
  uint64_t n;
  uint64_t p;
  uint32_t s;
  uint64_t m;
  normalp_verdict verdict;
  uint32_t valuation_needed;
  uint32_t valuation_available;
  normalp_guarantee guarantee;
} normalp_classification;

typedef struct normalp_limits {
  uint64_t order_cap;
  uint64_t table_cap;
} normalp_limits;

typedef struct normalp_certificate {
  uint64_t n;
  uint64_t p;
  uint32_t s;
  uint64_t m;
  int order_ok;
  int p_core_trivial;
  int solvable;
  int transitive_on_k;
  int point_stabilizer_is_sylow;
} normalp_certificate;

typedef struct normalp_group normalp_group;
typedef struct normalp_witness normalp_witness;
typedef struct normalp_homology normalp_homology;

NORMALP_API uint32_t normalp_abi_version(void);
NORMALP_API const char* normalp_last_error(void);
NORMALP_API void normalp_string_free(char* s);
NORMALP_API normalp_limits normalp_default_limits(void);

/* Arithmetic. Decimal strings carry values that may exceed 64 bits. */
NORMALP_API int normalp_is_prime(uint64_t n);
NORMALP_API normalp_status normalp_factorize(uint64_t m, uint64_t* primes, uint32_t* exponents,
                                             size_t capacity, size_t* count);
NORMALP_API normalp_status normalp_gamma(uint32_t t, uint64_t q, char** decimal);
NORMALP_API normalp_status normalp_big_gamma(uint64_t m, char** decimal);
NORMALP_API normalp_status normalp_big_gamma_valuation(uint64_t m, uint64_t p, uint32_t* out);

/* Classification. */
NORMALP_API const char* normalp_verdict_name(normalp_verdict v);
NORMALP_API const char* normalp_guarantee_name(normalp_guarantee g);
NORMALP_API normalp_status normalp_classify(uint64_t n, uint64_t p, normalp_classification* out);
/* Rows are released with normalp_classifications_free. */
NORMALP_API normalp_status normalp_sieve(uint64_t p, uint64_t lo, uint64_t hi,
                                         normalp_classification** rows, size_t* count);
NORMALP_API void normalp_classifications_free(normalp_classification* rows);

/* Permutation groups. images holds generator_count arrays of degree entries. */
NORMALP_API normalp_status normalp_group_create(uint32_t degree, const uint32_t* images,
                                                size_t generator_count, const normalp_limits* limits,
                                                normalp_group** out);
NORMALP_API normalp_status normalp_group_read_document(const char* text, const normalp_limits* limits,
                                                       normalp_group** out);
/* name may be NULL. */
NORMALP_API normalp_status normalp_group_write_document(const normalp_group* g, const char* name,
                                                        char** text);
NORMALP_API void normalp_group_free(normalp_group* g);
NORMALP_API uint32_t normalp_group_degree(const normalp_group* g);
NORMALP_API uint64_t normalp_group_order(const normalp_group* g);
NORMALP_API size_t normalp_group_generator_count(const normalp_group* g);
/* Copies degree images of generator index into images. */
NORMALP_API normalp_status normalp_group_generator(const normalp_group* g, size_t index, uint32_t* images);
NORMALP_API normalp_status normalp_group_contains(const normalp_group* g, const uint32_t* images,
                                                  int* out);
NORMALP_API normalp_status normalp_group_sylow(const normalp_group* g, uint64_t p, normalp_group** out);
NORMALP_API normalp_status normalp_group_p_core(const normalp_group* g, uint64_t p, normalp_group** out);
NORMALP_API normalp_status normalp_group_fitting(const normalp_group* g, normalp_group** out);
NORMALP_API normalp_status normalp_group_frattini(const normalp_group* g, normalp_group** out);
NORMALP_API normalp_status normalp_group_is_solvable(const normalp_group* g, int* out);
NORMALP_API normalp_status normalp_group_quotient_p_core_check(const normalp_group* g, uint64_t p,
                                                               int* out);

/* Witness construction. */
NORMALP_API normalp_status normalp_witness_construct(uint64_t n, uint64_t p, const normalp_limits* limits,
                                                     normalp_witness** out);
NORMALP_API void normalp_witness_free(normalp_witness* w);
NORMALP_API normalp_certificate normalp_witness_certificate(const normalp_witness* w);
/* Borrowed; valid while the witness lives. */
NORMALP_API const normalp_group* normalp_witness_group(const normalp_witness* w);
NORMALP_API normalp_status normalp_witness_verify(const normalp_witness* w, int* valid);

/* Reduced homology of the complex of nontrivial p-subgroups. */
NORMALP_API normalp_status normalp_quillen(const normalp_group* g, uint64_t p, size_t poset_cap,
                                           normalp_homology** out);
NORMALP_API void normalp_homology_free(normalp_homology* h);
NORMALP_API int normalp_homology_empty(const normalp_homology* h);
NORMALP_API size_t normalp_homology_poset_size(const normalp_homology* h);
NORMALP_API size_t normalp_homology_dimension_count(const normalp_homology* h);
NORMALP_API size_t normalp_homology_face_count(const normalp_homology* h, size_t d);
NORMALP_API uint64_t normalp_homology_betti(const normalp_homology* h, size_t d);
NORMALP_API size_t normalp_homology_torsion_count(const normalp_homology* h, size_t d);
/* Decimal string of torsion coefficient i in degree d. */
NORMALP_API normalp_status normalp_homology_torsion(const normalp_homology* h, size_t d, size_t i,
                                                    char** decimal);
NORMALP_API size_t normalp_homology_components(const normalp_homology* h);
NORMALP_API int normalp_homology_connected(const normalp_homology* h);
NORMALP_API int normalp_homology_acyclic(const normalp_homology* h);
NORMALP_API int64_t normalp_homology_euler_from_faces(const normalp_homology* h);
NORMALP_API int64_t normalp_homology_euler_from_betti(const normalp_homology* h);

#ifdef __cplusplus
}
#endif

#endif /* NORMALP_NORMALP_H */

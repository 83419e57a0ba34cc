/* kset — K-sets of small finite groups behind a C API.
 *
 * All functions return kset_status unless the value is trivially total;
 * kset_last_error() describes the most recent failure on the calling thread.
 * Handles are opaque and must be released with the matching _free call.
 */

#ifndef KSET_H
#define KSET_H

#include <stdint.h>

#if defined(__GNUC__)
#define KSET_API __attribute__((visibility("default")))
#else
#define KSET_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kset_status {
    KSET_OK = 0,
    KSET_ERR_SYNTAX = 1,   /* malformed spec string or input file */
    KSET_ERR_INVALID = 2,  /* parameter or table outside its contract */
    KSET_ERR_RANGE = 3,    /* bad element index, label or argument */
    KSET_ERR_RESOURCE = 4, /* memory cap or order cap exceeded */
    KSET_ERR_IO = 5,       /* file could not be read */
    KSET_ERR_INTERNAL = 6
} kset_status;

typedef enum kset_method {
    KSET_METHOD_AUTO = 0,
    KSET_METHOD_DP = 1,
    KSET_METHOD_MITM = 2,
    KSET_METHOD_SAMPLE = 3
} kset_method;

/* Computation policy shared by every command. Zero-initialize via
 * kset_policy_defaults; 0 threads means "all hardware threads". */
typedef struct kset_policy {
    int32_t method; /* kset_method */
    int32_t exact_limit;
    uint64_t sample_budget;
    uint64_t seed;
    uint64_t memory_cap_bytes;
    int32_t threads;
    int32_t exact_order_cap;
    int32_t max_depth;       /* series iteration bound */
    int32_t include_timings; /* add wall-clock fields to JSON reports */
} kset_policy;

KSET_API void kset_policy_defaults(kset_policy* pol);

KSET_API const char* kset_version(void);
KSET_API const char* kset_status_name(kset_status s);
KSET_API const char* kset_last_error(void);

/* ------------------------------------------------------------------ groups */

typedef struct kset_group kset_group;

/* Build a group from a spec string: cyclic:N | abelian:N1xN2x... |
 * semidirect:N:Q:R | heisenberg:P | sym:M | file:PATH | perm:PATH. */
KSET_API kset_status kset_group_open(const char* spec, kset_group** out);
KSET_API kset_status kset_group_from_cayley_text(const char* text, kset_group** out);
KSET_API kset_status kset_group_from_generators_text(const char* text, kset_group** out);
KSET_API void kset_group_free(kset_group* g);

KSET_API int32_t kset_group_order(const kset_group* g);
KSET_API int32_t kset_group_is_abelian(const kset_group* g);
KSET_API int32_t kset_group_is_odd(const kset_group* g);
KSET_API const char* kset_group_name(const kset_group* g);
KSET_API const char* kset_group_label(const kset_group* g, int32_t element);
KSET_API kset_status kset_group_find_label(const kset_group* g, const char* label, int32_t* out);

KSET_API kset_status kset_group_multiply(const kset_group* g, int32_t x, int32_t y, int32_t* out);
KSET_API kset_status kset_group_inverse(const kset_group* g, int32_t x, int32_t* out);
/* [a,b] = a^-1 b^-1 a b */
KSET_API kset_status kset_group_commutator(const kset_group* g, int32_t a, int32_t b,
                                           int32_t* out);

/* Set queries fill a caller buffer of capacity cap (>= group order always
 * suffices); *count receives the member count. */
KSET_API kset_status kset_group_commutant(const kset_group* g, int32_t* buf, int32_t cap,
                                          int32_t* count);
KSET_API kset_status kset_group_conjugacy_class(const kset_group* g, int32_t x, int32_t* buf,
                                                int32_t cap, int32_t* count);
KSET_API kset_status kset_group_real_elements(const kset_group* g, int32_t* buf, int32_t cap,
                                              int32_t* count);

/* ----------------------------------------------------------------- K-sets */

typedef struct kset_result kset_result;

/* Computes the K-set under the policy's method: AUTO dispatches between the
 * abelian shortcut, exact subset DP and seeded sampling against the
 * commutant; DP/MITM force an exact run; SAMPLE forces sampling. */
KSET_API kset_status kset_compute(const kset_group* g, const kset_policy* pol, kset_result** out);
KSET_API void kset_result_free(kset_result* r);

KSET_API const char* kset_result_method_name(const kset_result* r);
KSET_API int32_t kset_result_is_exact(const kset_result* r);
KSET_API int32_t kset_result_is_subgroup(const kset_result* r);
KSET_API kset_status kset_result_members(const kset_result* r, int32_t* buf, int32_t cap,
                                         int32_t* count);
KSET_API uint64_t kset_result_states(const kset_result* r);
KSET_API uint64_t kset_result_samples(const kset_result* r);
KSET_API uint64_t kset_result_peak_bytes(const kset_result* r);
KSET_API double kset_result_seconds(const kset_result* r);

/* Ordering of all order-1 non-identity elements whose product is target;
 * *found is 0 (with KSET_OK) when target is provably outside K. */
KSET_API kset_status kset_witness(const kset_group* g, int32_t target, const kset_policy* pol,
                                  int32_t* ordering, int32_t cap, int32_t* len, int32_t* found);

/* Ordering realizing the product of commutators [a,b][c,d]. */
KSET_API kset_status kset_two_commutator_witness(const kset_group* g, int32_t a, int32_t b,
                                                 int32_t c, int32_t d, const kset_policy* pol,
                                                 int32_t* ordering, int32_t cap, int32_t* len,
                                                 int32_t* found);

/* ---------------------------------------------------------------- reports */

/* Each command yields a canonical JSON document (schema_version 1) plus the
 * exit class of its outcome: 0 ok, 1 failed check, 3 resource limit. */
typedef struct kset_report kset_report;

KSET_API kset_status kset_cmd_info(const kset_group* g, const kset_policy* pol, kset_report** out);
KSET_API kset_status kset_cmd_kset(const kset_group* g, const kset_policy* pol, kset_report** out);
KSET_API kset_status kset_cmd_verify(const kset_group* g, const kset_policy* pol,
                                     kset_report** out);
KSET_API kset_status kset_cmd_lemma(const kset_group* g, const kset_policy* pol,
                                    kset_report** out);
KSET_API kset_status kset_cmd_theorem(const kset_group* g, const kset_policy* pol,
                                      kset_report** out);
KSET_API kset_status kset_cmd_series(const kset_group* g, const kset_policy* pol,
                                     kset_report** out);
/* target is an element label or a decimal element index. */
KSET_API kset_status kset_cmd_witness(const kset_group* g, const char* target,
                                      const kset_policy* pol, kset_report** out);
/* Hypothesis verdicts over the whole odd catalog up to max_order (<= 27). */
KSET_API kset_status kset_cmd_survey(int32_t max_order, const kset_policy* pol,
                                     kset_report** out);
/* The sixteen-pattern overlap atlas and its exhaustiveness check. */
KSET_API kset_status kset_cmd_cases(const kset_policy* pol, kset_report** out);

KSET_API const char* kset_report_json(const kset_report* r);
KSET_API int32_t kset_report_exit_code(const kset_report* r);
KSET_API void kset_report_free(kset_report* r);

#ifdef __cplusplus
}
#endif

#endif /* KSET_H */

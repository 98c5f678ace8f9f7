#ifndef CUBEPERM_CUBEPERM_H
#define CUBEPERM_CUBEPERM_H

/*
 * C interface to the cubeperm library: cubic residue symbols over Z[w], the
 * sign of the cube permutation s_p(g), and range audits of the identities
 * around it.
 *
 * Every function returns a cp_status. On failure, cp_last_error() returns a
 * message for the calling thread, valid until its next library call.
 * Handles are opaque, owned by the caller, and released with the matching
 * *_destroy function. Destroy functions accept NULL.
 *
 * Rendering uses the two-call convention: pass buf = NULL to learn the size
 * (excluding the terminating NUL) through *needed, then call again with a
 * buffer of at least needed + 1 bytes.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CUBEPERM_BUILDING)
#    define CUBEPERM_API __declspec(dllexport)
#  else
#    define CUBEPERM_API __declspec(dllimport)
#  endif
#else
#  define CUBEPERM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cp_status {
  CP_OK = 0,
  CP_ERR_INVALID_ARGUMENT = 1,
  CP_ERR_NOT_PRIME = 2,
  CP_ERR_WRONG_RESIDUE_CLASS = 3,
  CP_ERR_NOT_PRIMITIVE_ROOT = 4,
  CP_ERR_OVERFLOW = 5,
  CP_ERR_ZERO_DIVISOR = 6,
  CP_ERR_NOT_COPRIME_TO_THREE = 7,
  CP_ERR_NOT_A_BIJECTION = 8,
  CP_ERR_ZERO_K = 9,
  CP_ERR_NO_REPRESENTATION = 10,
  CP_ERR_NORMALIZATION = 11,
  CP_ERR_INTERNAL = 12,
  CP_ERR_BUFFER_TOO_SMALL = 13
} cp_status;

typedef enum cp_format { CP_FORMAT_TEXT = 0, CP_FORMAT_CSV = 1, CP_FORMAT_JSON = 2 } cp_format;

typedef enum cp_scope { CP_SCOPE_LEMMAS = 0, CP_SCOPE_THEOREM = 1, CP_SCOPE_ALL = 2 } cp_scope;

typedef struct cp_context cp_context;
typedef struct cp_report cp_report;
typedef struct cp_summary cp_summary;

/* Snapshot of a prime context. has_h is 0 when p = 1 (mod 4). */
typedef struct cp_context_fields {
  int64_t p, n, g;
  int64_t pi_a, pi_b;
  int64_t w;
  int64_t r, s;
  int64_t delta, alpha, beta, gamma;
  int64_t h;
  int has_h;
} cp_context_fields;

typedef struct cp_verify_options {
  cp_scope scope;
  int64_t p_min;
  int64_t p_max;
  unsigned jobs;
  int uncapped; /* nonzero: ignore per-suite default bounds */
} cp_verify_options;

CUBEPERM_API const char* cp_status_string(cp_status status);
CUBEPERM_API const char* cp_last_error(void);

/* Scalar entry points. */
CUBEPERM_API cp_status cp_is_primitive_root(int64_t p, int64_t g, int* out);
CUBEPERM_API cp_status cp_smallest_primitive_root(int64_t p, int64_t* out);
CUBEPERM_API cp_status cp_cube_permutation_sign(int64_t p, int64_t g, int* out_sign);
CUBEPERM_API cp_status cp_cubic_symbol(int64_t k, int64_t pi_a, int64_t pi_b, int64_t p, int* out_exponent);
CUBEPERM_API cp_status cp_class_number(int64_t p, int64_t* out_h, int64_t* out_oracle);

/* Prime context. g = 0 selects the smallest primitive root. */
CUBEPERM_API cp_status cp_context_create(int64_t p, int64_t g, cp_context** out);
CUBEPERM_API cp_status cp_context_get(const cp_context* ctx, cp_context_fields* out);
CUBEPERM_API void cp_context_destroy(cp_context* ctx);

/* Single-prime audit. g = 0 selects the smallest primitive root. */
CUBEPERM_API cp_status cp_report_create(int64_t p, int64_t g, cp_report** out);
CUBEPERM_API cp_status cp_report_actual_sign(const cp_report* report, int* out_sign);
CUBEPERM_API cp_status cp_report_render(const cp_report* report, cp_format format, char* buf, size_t cap,
                                        size_t* needed);
CUBEPERM_API void cp_report_destroy(cp_report* report);

/* Range audit. */
CUBEPERM_API cp_status cp_verify_run(const cp_verify_options* options, cp_summary** out);
CUBEPERM_API cp_status cp_summary_check_failures(const cp_summary* summary, int64_t* out);
CUBEPERM_API cp_status cp_summary_render(const cp_summary* summary, cp_format format, char* buf, size_t cap,
                                         size_t* needed);
CUBEPERM_API void cp_summary_destroy(cp_summary* summary);

#ifdef __cplusplus
}
#endif

#endif /* CUBEPERM_CUBEPERM_H */

/* C interface to the jacgen engine: exact evaluation of one-parameter
 * generalized Jacobsthal / Jacobsthal-Lucas sequences, generating-function
 * expansion, and brute-force identity verification.
 *
 * Conventions:
 *   - Every fallible call returns jg_status; JG_OK is 0.
 *   - Big integers cross the boundary as decimal strings allocated by the
 *     library; release them with jg_string_free().
 *   - Objects are opaque; release with the matching *_free(). Passing NULL
 *     to a *_free() is a no-op.
 */
#ifndef JACGEN_H
#define JACGEN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(JG_BUILD)
#define JG_API __declspec(dllexport)
#else
#define JG_API __declspec(dllimport)
#endif
#else
#define JG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jg_status {
  JG_OK = 0,
  JG_EINVAL = 1,   /* invalid argument (bad k, unknown enum value, ...) */
  JG_ERANGE = 2,   /* argument outside the callee's domain */
  JG_EINTERNAL = 3 /* broken internal invariant; indicates a library bug */
} jg_status;

typedef enum jg_kind {
  JG_JACOBSTHAL = 0,      /* seeds 0, 1 */
  JG_JACOBSTHAL_LUCAS = 1 /* seeds 2, 2 */
} jg_kind;

typedef enum jg_method {
  JG_METHOD_ITER = 0,  /* O(n) recurrence walk */
  JG_METHOD_BINET = 1, /* closed form in k^n */
  JG_METHOD_MATRIX = 2 /* 2x2 matrix power, O(log n) */
} jg_method;

/* Statement variant: as printed vs. as confirmed by exhaustive checking. */
typedef enum jg_form {
  JG_FORM_PAPER = 0,
  JG_FORM_CORRECTED = 1
} jg_form;

typedef enum jg_identity {
  JG_IDENTITY_CATALAN_J = 0,
  JG_IDENTITY_CATALAN_LUCAS = 1,
  JG_IDENTITY_CASSINI_J = 2,
  JG_IDENTITY_CASSINI_LUCAS = 3,
  JG_IDENTITY_DOCAGNE_J = 4,
  JG_IDENTITY_DOCAGNE_LUCAS = 5,
  JG_IDENTITY_CONVOLUTION_J = 6,
  JG_IDENTITY_CONVOLUTION_LUCAS = 7,
  JG_IDENTITY_INTERTERMS_A = 8,
  JG_IDENTITY_INTERTERMS_B = 9,
  JG_IDENTITY_SUM_J = 10,
  JG_IDENTITY_SUM_LUCAS = 11,
  JG_IDENTITY_COLUMN_VECTOR = 12,
  JG_IDENTITY_COMMUTATION = 13
} jg_identity;

#define JG_IDENTITY_COUNT 14

typedef struct jg_sequence jg_sequence;
typedef struct jg_stream jg_stream;
typedef struct jg_series_report jg_series_report;
typedef struct jg_sweep jg_sweep;

/* --- library ------------------------------------------------------------ */

/* Version string, e.g. "1.0.0". Static storage; do not free. */
JG_API const char* jg_version(void);

/* Human-readable description of a status code. Static storage. */
JG_API const char* jg_status_message(jg_status status);

/* Releases a string returned through a char** out-parameter. */
JG_API void jg_string_free(char* s);

/* --- sequences ----------------------------------------------------------- */

/* Creates a sequence handle; requires k >= 2. */
JG_API jg_status jg_sequence_new(jg_kind kind, int64_t k, jg_sequence** out);
JG_API void jg_sequence_free(jg_sequence* seq);

/* Term n by the chosen strategy, as a decimal string. */
JG_API jg_status jg_eval(const jg_sequence* seq, uint64_t n, jg_method method,
                         char** out);

/* Sum of terms 0..n, as a decimal string. */
JG_API jg_status jg_prefix_sum(const jg_sequence* seq, uint64_t n, char** out);

/* Stream of consecutive terms over the inclusive window [from, to]. */
JG_API jg_status jg_stream_new(const jg_sequence* seq, uint64_t from,
                               uint64_t to, jg_stream** out);

/* Yields the next (index, value) pair. Returns 1 and fills the
 * out-parameters while terms remain, 0 once the stream is exhausted
 * (out-parameters untouched). NULL out_index or out_value is allowed. */
JG_API int jg_stream_next(jg_stream* stream, uint64_t* out_index,
                          char** out_value);
JG_API void jg_stream_free(jg_stream* stream);

/* --- generating functions ------------------------------------------------ */

/* Streams the first `count` power-series coefficients of the sequence's
 * generating function in the given form; count >= 1. */
JG_API jg_status jg_series_expand(const jg_sequence* seq, jg_form form,
                                  uint64_t count, jg_stream** out);

/* Expands both forms to `count` coefficients and compares them against
 * recurrence-generated terms. */
JG_API jg_status jg_series_match(const jg_sequence* seq, uint64_t count,
                                 jg_series_report** out);
JG_API void jg_series_report_free(jg_series_report* report);

/* 1 if the form's expansion matches, 0 otherwise. */
JG_API int jg_series_form_matches(const jg_series_report* report, jg_form form);

/* Lowest mismatching coefficient index for the form, or -1 if it matches. */
JG_API int64_t jg_series_first_mismatch(const jg_series_report* report,
                                        jg_form form);

/* The two disagreeing values at the first mismatch (expansion vs. expected).
 * JG_EINVAL if the form matches. Either out-pointer may be NULL. */
JG_API jg_status jg_series_mismatch_values(const jg_series_report* report,
                                           jg_form form, char** out_expanded,
                                           char** out_expected);

/* --- identity verification ----------------------------------------------- */

/* Stable kebab-case identity name, e.g. "catalan-j". Static storage. */
JG_API const char* jg_identity_name(jg_identity id);

/* Parses a name produced by jg_identity_name. */
JG_API jg_status jg_identity_from_name(const char* name, jg_identity* out);

/* Comma-separated index names the identity sweeps over ("n,r"; "" when the
 * identity has no index). Static storage. */
JG_API const char* jg_identity_indices(jg_identity id);

/* Exhaustive sweep over k in [k_min, k_max] and the identity's index domain
 * capped by index_bound. A non-NULL pin restricts that index to one value
 * (pins may exceed index_bound; a pin for an index the identity does not use
 * is JG_EINVAL). Deterministic: ascending k, then indices in declared order,
 * so the first counterexample is reproducible. */
JG_API jg_status jg_sweep_run(jg_identity id, jg_form form, int64_t k_min,
                              int64_t k_max, uint64_t index_bound,
                              const int64_t* pin_n, const int64_t* pin_r,
                              const int64_t* pin_m, jg_sweep** out);
JG_API void jg_sweep_free(jg_sweep* sweep);

JG_API uint64_t jg_sweep_checks(const jg_sweep* sweep);
JG_API uint64_t jg_sweep_failures(const jg_sweep* sweep);

/* 1 when the sweep found at least one failing instance. */
JG_API int jg_sweep_has_counterexample(const jg_sweep* sweep);

/* First (in sweep order) failing instance. All return JG_EINVAL when the
 * sweep has no counterexample. */
JG_API jg_status jg_sweep_cx_k(const jg_sweep* sweep, int64_t* out);
JG_API jg_status jg_sweep_cx_index_count(const jg_sweep* sweep, size_t* out);
JG_API jg_status jg_sweep_cx_index_name(const jg_sweep* sweep, size_t i,
                                        const char** out);
JG_API jg_status jg_sweep_cx_index_value(const jg_sweep* sweep, size_t i,
                                         uint64_t* out);

/* The two sides of the failing comparison, as decimal strings. Either
 * out-pointer may be NULL. */
JG_API jg_status jg_sweep_cx_values(const jg_sweep* sweep, char** out_lhs,
                                    char** out_rhs);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* JACGEN_H */

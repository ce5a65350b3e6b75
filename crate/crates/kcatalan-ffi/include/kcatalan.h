#ifndef KCATALAN_H
#define KCATALAN_H

/* This file is generated by cbindgen from kcatalan-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code of every fallible call.
typedef enum {
  KC_STATUS_OK = 0,
  // A required pointer argument was null.
  KC_STATUS_NULL_ARGUMENT = 1,
  // Bad input: dimension, bound, modulus, index, or weight spec.
  KC_STATUS_INVALID_ARGUMENT = 2,
  // The computation refused to run (enumeration cap exceeded).
  KC_STATUS_REFUSED = 3,
  // Cycle detection exhausted its step budget.
  KC_STATUS_UNDETERMINED = 4,
} KcStatus;

// Which divisibility reduction produced a finite system.
typedef enum {
  KC_HYPOTHESIS_NONE = 0,
  KC_HYPOTHESIS_CONSECUTIVE = 1,
  KC_HYPOTHESIS_PAIR = 2,
  KC_HYPOTHESIS_PRODUCT = 3,
} KcHypothesis;

// Opaque transfer matrix.
typedef struct KcMatrix KcMatrix;

// Opaque parsed weight vector.
typedef struct KcWeights KcWeights;

// Preperiod/period pair for the state vector and for its first
// coordinate.
typedef struct {
  uint64_t modulus;
  uint64_t vector_preperiod;
  uint64_t vector_period;
  uint64_t scalar_preperiod;
  uint64_t scalar_period;
  bool confirmed;
} KcPeriodReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Version of the underlying library, as a static C string.
const char *kc_version(void);

// Message describing the most recent failure on this thread. Valid
// until the next failing call on the same thread.
const char *kc_last_error_message(void);

// Releases a string allocated by this library.
//
// # Safety
// `s` must be a pointer previously returned through an out-parameter of
// this library and not yet freed; null is ignored.
void kc_string_free(char *s);

// Parses a weight spec (`ones`, `odd-squares`, `geom:<int>`,
// `list:..[;tail:..]`) into a handle.
//
// # Safety
// `spec` must point to a NUL-terminated string; `out` must be a valid
// destination pointer.
KcStatus kc_weights_parse(const char *spec, KcWeights **out);

// Renders a handle back to its canonical spec text.
//
// # Safety
// `weights` must be a live handle from [`kc_weights_parse`]; `out` must
// be a valid destination pointer.
KcStatus kc_weights_render(const KcWeights *weights, char **out);

// Releases a weights handle; null is ignored.
//
// # Safety
// `weights` must come from [`kc_weights_parse`] and not be freed twice.
void kc_weights_free(KcWeights *weights);

// The closed-form count for (k, n), as a decimal string.
//
// # Safety
// `out` must be a valid destination pointer.
KcStatus kc_catalan(size_t k, uint32_t n, uint64_t modulus, char **out);

// The weighted count for (k, n).
//
// # Safety
// `weights` must be null (all-ones) or a live handle; `out` must be a
// valid destination pointer.
KcStatus kc_weighted_catalan(size_t k,
                             uint32_t n,
                             const KcWeights *weights,
                             uint64_t modulus,
                             char **out);

// The height-bounded weighted count for (k, s, n).
//
// # Safety
// As for [`kc_weighted_catalan`].
KcStatus kc_bounded_catalan(size_t k,
                            int64_t s,
                            uint32_t n,
                            const KcWeights *weights,
                            uint64_t modulus,
                            char **out);

// The number of paths of maximum height exactly s.
//
// # Safety
// `out` must be a valid destination pointer.
KcStatus kc_exact_height_count(size_t k, int64_t s, uint32_t n, uint64_t modulus, char **out);

// The number of paths with exactly p peaks.
//
// # Safety
// `out` must be a valid destination pointer.
KcStatus kc_narayana_count(size_t k, size_t p, uint32_t n, uint64_t modulus, char **out);

// Height-triangle rows 1..=rows as a JSON object with decimal-string
// entries.
//
// # Safety
// `out` must be a valid destination pointer.
KcStatus kc_height_triangle_json(size_t k, uint32_t rows, uint64_t modulus, char **out);

// Narayana-triangle rows 1..=rows as a JSON object.
//
// # Safety
// `out` must be a valid destination pointer.
KcStatus kc_narayana_triangle_json(size_t k, uint32_t rows, uint64_t modulus, char **out);

// Builds the transfer matrix of the s-bounded system.
//
// # Safety
// `weights` must be null or a live handle; `out` must be a valid
// destination pointer.
KcStatus kc_matrix_build(size_t k,
                         int64_t s,
                         const KcWeights *weights,
                         uint64_t modulus,
                         KcMatrix **out);

// Releases a matrix handle; null is ignored.
//
// # Safety
// `matrix` must come from this library and not be freed twice.
void kc_matrix_free(KcMatrix *matrix);

// Number of states; 0 for a null handle.
//
// # Safety
// `matrix` must be null or a live handle.
size_t kc_matrix_dim(const KcMatrix *matrix);

// One matrix entry as a decimal string.
//
// # Safety
// `matrix` must be a live handle; `out` must be a valid destination
// pointer.
KcStatus kc_matrix_entry(const KcMatrix *matrix, size_t row, size_t col, char **out);

// The whole matrix with its state list as JSON.
//
// # Safety
// `matrix` must be a live handle; `out` must be a valid destination
// pointer.
KcStatus kc_matrix_to_json(const KcMatrix *matrix, char **out);

// First coordinate of `M^n * e1`, the n-th term of the bounded
// sequence.
//
// # Safety
// `matrix` must be a live handle; `out` must be a valid destination
// pointer.
KcStatus kc_matrix_sequence_term(const KcMatrix *matrix, uint32_t n, uint64_t modulus, char **out);

// Finds the exact preperiod and period of the orbit modulo `modulus`.
// A `max_steps` of 0 selects the always-sufficient budget
// `modulus^dim + 1`.
//
// # Safety
// `matrix` must be a live handle; `out` must point to a
// [`KcPeriodReport`].
KcStatus kc_detect_cycle(const KcMatrix *matrix,
                         uint64_t modulus,
                         uint64_t max_steps,
                         KcPeriodReport *out);

// Tries the divisibility reductions for the weighted sequence modulo
// `modulus`. On success `*out_matrix` owns the finite system and
// `*out_hypothesis`/`*out_cap` describe the reduction; when no
// hypothesis applies, `*out_matrix` is null and `*out_hypothesis` is
// `None` with an `Ok` status. A `limit` of 0 selects the default scan
// depth.
//
// # Safety
// `weights` must be null or a live handle; the three out-pointers must
// be valid destinations.
KcStatus kc_periodic_form(size_t k,
                          const KcWeights *weights,
                          uint64_t modulus,
                          size_t limit,
                          KcMatrix **out_matrix,
                          int64_t *out_cap,
                          KcHypothesis *out_hypothesis);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KCATALAN_H */

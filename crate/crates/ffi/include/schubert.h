#ifndef SCHUBERT_H
#define SCHUBERT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SchubertStatus {
  SCHUBERT_STATUS_OK = 0,
  SCHUBERT_STATUS_NULL_POINTER = 1,
  SCHUBERT_STATUS_INVALID_UTF8 = 2,
  SCHUBERT_STATUS_PARSE_ERROR = 3,
  SCHUBERT_STATUS_INVALID_ARGUMENT = 4,
  SCHUBERT_STATUS_INTERNAL = 5,
} SchubertStatus;

typedef enum SchubertVerdict {
  SCHUBERT_VERDICT_DECOMPOSABLE = 0,
  SCHUBERT_VERDICT_NOT_DECOMPOSABLE = 1,
  // The three predicates disagree; this indicates a bug.
  SCHUBERT_VERDICT_DISAGREEMENT = 2,
} SchubertVerdict;

// Opaque tensor handle.
typedef struct SchubertTensor SchubertTensor;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses `{"rank":r,"coeffs":[{"partition":[..],"coeff":"..."}]}`.
//
// # Safety
// `json` must be a nul-terminated string; `out` must be writable.
enum SchubertStatus schubert_tensor_from_json(const char *json, struct SchubertTensor **out);

// Deterministic random decomposable tensor in `⋀^r` of an `n`-dimensional space.
//
// # Safety
// `out` must be writable.
enum SchubertStatus schubert_tensor_random_decomposable(size_t r,
                                                        size_t n,
                                                        uint64_t seed,
                                                        struct SchubertTensor **out);

// # Safety
// `tensor` must come from this library and not be freed; `out` must be writable.
enum SchubertStatus schubert_tensor_to_json(const struct SchubertTensor *tensor, char **out);

// Rank of the tensor, 0 for a null handle.
//
// # Safety
// `tensor` must be null or a live handle.
size_t schubert_tensor_rank(const struct SchubertTensor *tensor);

// # Safety
// `tensor` must be null or a live handle; it is invalid afterwards.
void schubert_tensor_free(struct SchubertTensor *tensor);

// Runs the three decomposability predicates.
//
// # Safety
// `tensor` must be a live handle; `out` must be writable.
enum SchubertStatus schubert_tensor_decomposable(const struct SchubertTensor *tensor,
                                                 enum SchubertVerdict *out);

// Quadrics for `⋀^r` of an `n`-dimensional space, one per line.
//
// # Safety
// `out` must be writable.
enum SchubertStatus schubert_ideal_text(size_t r, size_t n, char **out);

// KP residue check of a tau function given as JSON, truncated at `weight`.
// `*passes` is set when the residue vanishes up to that weight.
//
// # Safety
// `tau_json` must be a nul-terminated string; `passes` must be writable.
enum SchubertStatus schubert_kp_check(const char *tau_json, uint32_t weight, bool *passes);

// # Safety
// `s` must be null or a string returned by this library.
void schubert_string_free(char *s);

// Message for the last failed call on this thread, or null. Valid until
// the next call into the library from the same thread.
const char *schubert_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCHUBERT_H */

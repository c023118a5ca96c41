#ifndef ZFW_H
#define ZFW_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. Zero is success.
 */
typedef enum ZfwStatus {
  ZFW_STATUS_OK = 0,
  ZFW_STATUS_NULL_POINTER = 1,
  ZFW_STATUS_INVALID_GRAPH6 = 2,
  ZFW_STATUS_INVALID_ARGUMENT = 3,
  ZFW_STATUS_PRECONDITION = 4,
  ZFW_STATUS_BUDGET_EXCEEDED = 5,
  ZFW_STATUS_NOT_FORCING_SET = 6,
  ZFW_STATUS_SEARCH_FAILED = 7,
  ZFW_STATUS_PANIC = 8,
} ZfwStatus;

/**
 * Opaque graph handle.
 */
typedef struct ZfwGraph ZfwGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *zfw_last_error_message(void);

/**
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum ZfwStatus zfw_graph_from_graph6(const char *text, struct ZfwGraph **out);

/**
 * Builds a graph from `m` edges given as `2 * m` vertex indices.
 *
 * # Safety
 * `edges` must point to `2 * m` readable values (may be NULL when `m` is 0).
 */
enum ZfwStatus zfw_graph_from_edges(size_t n,
                                    const uint32_t *edges,
                                    size_t m,
                                    struct ZfwGraph **out);

/**
 * # Safety
 * `g` must be NULL or a handle from this library not yet freed.
 */
void zfw_graph_free(struct ZfwGraph *g);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum ZfwStatus zfw_graph_order(const struct ZfwGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer. Free the result with `zfw_string_free`.
 */
enum ZfwStatus zfw_graph_to_graph6(const struct ZfwGraph *g, char **out);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void zfw_string_free(char *s);

/**
 * Exact zero forcing number and a minimum zero forcing set.
 *
 * # Safety
 * `g` must be a live handle; `z` and `witness` valid pointers.
 */
enum ZfwStatus zfw_zero_forcing_number(const struct ZfwGraph *g,
                                       double budget_secs,
                                       size_t *z,
                                       uint64_t *witness);

/**
 * Exact independence number and a maximum independent set.
 *
 * # Safety
 * `g` must be a live handle; `alpha` and `witness` valid pointers.
 */
enum ZfwStatus zfw_independence_number(const struct ZfwGraph *g,
                                       double budget_secs,
                                       size_t *alpha,
                                       uint64_t *witness);

/**
 * Minimum decycling set size and a witness.
 *
 * # Safety
 * `g` must be a live handle; `phi` and `witness` valid pointers.
 */
enum ZfwStatus zfw_decycling_number(const struct ZfwGraph *g,
                                    double budget_secs,
                                    size_t *phi,
                                    uint64_t *witness);

/**
 * Blue set reached from `blue` under the color change rule.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum ZfwStatus zfw_closure(const struct ZfwGraph *g, uint64_t blue, uint64_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum ZfwStatus zfw_is_zero_forcing_set(const struct ZfwGraph *g, uint64_t blue, bool *out);

/**
 * Full certificate for a connected graph as one JSON object.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer. Free the result with `zfw_string_free`.
 */
enum ZfwStatus zfw_verify_graph_json(const struct ZfwGraph *g, double budget_secs, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZFW_H */

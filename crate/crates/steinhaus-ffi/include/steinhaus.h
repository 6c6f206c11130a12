#ifndef STEINHAUS_H
#define STEINHAUS_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum StStatus {
  /**
   * Success.
   */
  ST_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  ST_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not a valid bitstring, or was not UTF-8.
   */
  ST_STATUS_BAD_BITSTRING = 2,
  /**
   * An index or size argument was out of range.
   */
  ST_STATUS_OUT_OF_RANGE = 3,
  /**
   * The operation is not defined for the given arguments.
   */
  ST_STATUS_UNSUPPORTED = 4,
} StStatus;

/**
 * Symmetry classes of Steinhaus triangles.
 */
typedef enum StClass {
  ST_CLASS_FULL = 0,
  ST_CLASS_H = 1,
  ST_CLASS_R = 2,
  ST_CLASS_D = 3,
  ST_CLASS_D0 = 4,
} StClass;

/**
 * Opaque Steinhaus triangle handle.
 */
typedef struct StTriangle StTriangle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a triangle from the bitstring of its first row.
 *
 * # Safety
 * `first_row` must be a valid NUL-terminated string and `out` a valid
 * pointer. The result must be released with `st_triangle_free`.
 */
enum StStatus st_triangle_new(const char *first_row, struct StTriangle **out);

/**
 * Releases a triangle handle. Null is ignored.
 *
 * # Safety
 * `t` must be a handle from this library, not yet freed.
 */
void st_triangle_free(struct StTriangle *t);

/**
 * Size (number of first-row terms) of the triangle.
 *
 * # Safety
 * `t` and `out` must be valid pointers.
 */
enum StStatus st_triangle_size(const struct StTriangle *t, uintptr_t *out);

/**
 * The entry at 1-based position (i, j), 1 <= i <= j <= size.
 *
 * # Safety
 * `t` and `out` must be valid pointers.
 */
enum StStatus st_triangle_entry(const struct StTriangle *t, uintptr_t i, uintptr_t j, uint8_t *out);

/**
 * The first row as a freshly allocated NUL-terminated bitstring; release
 * with `st_string_free`.
 *
 * # Safety
 * `t` and `out` must be valid pointers.
 */
enum StStatus st_triangle_first_row(const struct StTriangle *t, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library, not yet freed.
 */
void st_string_free(char *s);

/**
 * The 120-degree rotation of the triangle, as a new handle.
 *
 * # Safety
 * `t` and `out` must be valid pointers.
 */
enum StStatus st_triangle_rotate(const struct StTriangle *t, struct StTriangle **out);

/**
 * The horizontal reflection of the triangle, as a new handle.
 *
 * # Safety
 * `t` and `out` must be valid pointers.
 */
enum StStatus st_triangle_reflect(const struct StTriangle *t, struct StTriangle **out);

/**
 * The symmetrized (rotationally symmetric) image of the triangle.
 *
 * # Safety
 * `t` and `out` must be valid pointers.
 */
enum StStatus st_triangle_rho(const struct StTriangle *t, struct StTriangle **out);

/**
 * Number of one-entries in the triangle.
 *
 * # Safety
 * `t` and `out` must be valid pointers.
 */
enum StStatus st_triangle_count_ones(const struct StTriangle *t, uintptr_t *out);

/**
 * Whether the triangle holds as many zeros as ones (1 = balanced).
 *
 * # Safety
 * `t` and `out` must be valid pointers.
 */
enum StStatus st_triangle_is_balanced(const struct StTriangle *t, uint8_t *out);

/**
 * Whether the triangle belongs to the symmetry class (1 = member).
 *
 * # Safety
 * `t` and `out` must be valid pointers.
 */
enum StStatus st_is_member(enum StClass cls, const struct StTriangle *t, uint8_t *out);

/**
 * Dimension of a symmetry class at size n.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum StStatus st_dim(enum StClass cls, uintptr_t n, uintptr_t *out);

/**
 * The k-th element (0-based) of the closed-form basis of the class at size
 * n, as a new triangle handle.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum StStatus st_basis_element(enum StClass cls, uintptr_t n, uintptr_t k, struct StTriangle **out);

/**
 * The symmetric triangle of size 2n-1 associated to the Steinhaus graph
 * with the given defining sequence of length n-1.
 *
 * # Safety
 * `seq` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum StStatus st_graph_theta(const char *seq, struct StTriangle **out);

/**
 * Whether every vertex of the Steinhaus graph with the given defining
 * sequence has even degree (1 = even graph).
 *
 * # Safety
 * `seq` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum StStatus st_graph_is_even(const char *seq, uint8_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STEINHAUS_H */

#ifndef TROPKIT_H
#define TROPKIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result of a call.
typedef enum TkStatus {
  TK_STATUS_OK = 0,
  // Well-formed request rejected by the mathematics.
  TK_STATUS_DOMAIN = 1,
  // Malformed or invalid input data.
  TK_STATUS_INPUT = 2,
  TK_STATUS_NULL_POINTER = 3,
  // A bug inside the library; the handle arguments are still valid.
  TK_STATUS_PANIC = 4,
} TkStatus;

// Plane tropical curve.
typedef struct TkCurve TkCurve;

// Metric graph.
typedef struct TkGraph TkGraph;

// Tropical polynomial.
typedef struct TkPolynomial TkPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failed call on this thread, or an empty
// string. Valid until the next call into the library on the same thread.
const char *tk_last_error(void);

// # Safety
// `s` must be NULL or a string returned by this library and not yet freed.
void tk_string_free(char *s);

// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum TkStatus tk_polynomial_from_json(const char *json, struct TkPolynomial **out);

// # Safety
// `p` must be NULL or a handle from [`tk_polynomial_from_json`] not yet freed.
void tk_polynomial_free(struct TkPolynomial *p);

// Evaluates at a point given as comma-separated rationals; the value is
// written as a rational string or `"-inf"`.
//
// # Safety
// Pointers must be valid as described in the module docs.
enum TkStatus tk_polynomial_evaluate(const struct TkPolynomial *p, const char *point, char **out);

// Corner locus of a two-variable polynomial.
//
// # Safety
// Pointers must be valid as described in the module docs.
enum TkStatus tk_polynomial_corner_locus(const struct TkPolynomial *p, struct TkCurve **out);

// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum TkStatus tk_curve_from_json(const char *json, struct TkCurve **out);

// # Safety
// `c` must be NULL or a curve handle not yet freed.
void tk_curve_free(struct TkCurve *c);

// Canonical JSON encoding of the curve.
//
// # Safety
// Pointers must be valid as described in the module docs.
enum TkStatus tk_curve_to_json(const struct TkCurve *c, char **out);

// # Safety
// Pointers must be valid as described in the module docs.
enum TkStatus tk_curve_is_balanced(const struct TkCurve *c, bool *out);

// # Safety
// Pointers must be valid as described in the module docs.
enum TkStatus tk_curve_degree(const struct TkCurve *c, uint64_t *out);

// Stable intersection report as JSON.
//
// # Safety
// Pointers must be valid as described in the module docs.
enum TkStatus tk_curve_intersect(const struct TkCurve *a,
                                 const struct TkCurve *b,
                                 uint64_t seed,
                                 char **out);

// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum TkStatus tk_graph_from_json(const char *json, struct TkGraph **out);

// # Safety
// `g` must be NULL or a graph handle not yet freed.
void tk_graph_free(struct TkGraph *g);

// # Safety
// Pointers must be valid as described in the module docs.
enum TkStatus tk_graph_genus(const struct TkGraph *g, uintptr_t *out);

// Rank of a divisor given as divisor JSON.
//
// # Safety
// Pointers must be valid as described in the module docs.
enum TkStatus tk_graph_rank(const struct TkGraph *g, const char *divisor, int64_t *out);

// # Safety
// Pointers must be valid as described in the module docs.
enum TkStatus tk_graph_riemann_roch(const struct TkGraph *g, const char *divisor, bool *out);

// Period matrix as a row-major JSON array of rational strings.
//
// # Safety
// Pointers must be valid as described in the module docs.
enum TkStatus tk_graph_period_matrix(const struct TkGraph *g, char **out);

// Abel-Jacobi image of a degree-zero divisor as `{"coords": [...]}`.
//
// # Safety
// Pointers must be valid as described in the module docs.
enum TkStatus tk_graph_abel_jacobi(const struct TkGraph *g, const char *divisor, char **out);

// Number of degree-`degree`, genus-`genus` plane curves through generic
// points, as a decimal string. Degrees above the default enumeration
// bound are rejected as input errors.
//
// # Safety
// `out` must be writable.
enum TkStatus tk_count_curves(uint32_t degree, uint32_t genus, char **out);

// Rational curve count from the associativity recursion, as a decimal string.
//
// # Safety
// `out` must be writable.
enum TkStatus tk_kontsevich(uint32_t degree, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TROPKIT_H */

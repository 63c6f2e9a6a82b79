/* C ABI for the smallcover library. All strings returned through out-parameters are owned by the caller and must be released with sc_string_free. */

#ifndef SMALLCOVER_H
#define SMALLCOVER_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Success.
#define SC_OK 0

// The analysis itself failed (guards, rank defects, invalid data).
#define SC_ERR_ANALYSIS 1

// Malformed input (JSON, incidence, parameters).
#define SC_ERR_BAD_INPUT 2

// A required pointer was null.
#define SC_ERR_NULL 3

// A string argument was not valid UTF-8.
#define SC_ERR_UTF8 4

// Combinatorial simple polytope (opaque).
typedef struct ScPolytope ScPolytope;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or an empty string.
// The caller owns the result.
char *sc_last_error_message(void);

// Releases a string returned by this library.
//
// # Safety
// `s` must be a pointer previously returned by one of these functions and
// not yet freed; null is ignored.
void sc_string_free(char *s);

// Parses a polytope from its JSON schema.
//
// # Safety
// `json` must be a valid NUL-terminated string and `out` a valid pointer.
int32_t sc_polytope_from_json(const char *json, struct ScPolytope **out);

// Serializes a polytope to its JSON schema. The caller owns the result.
//
// # Safety
// `p` must be a live handle from this library (or null, which fails).
int32_t sc_polytope_to_json(const struct ScPolytope *p, char **out);

// The n-simplex.
int32_t sc_polytope_simplex(size_t n, struct ScPolytope **out);

// The n-cube with facet pairs (j, n + j).
int32_t sc_polytope_cube(size_t n, struct ScPolytope **out);

// The m-gon.
int32_t sc_polytope_polygon(size_t m, struct ScPolytope **out);

// The simple dual of the cyclic polytope on k points in dimension n.
int32_t sc_polytope_dual_cyclic(size_t k, size_t n, struct ScPolytope **out);

// Cartesian product of two polytopes.
//
// # Safety
// `a` and `b` must be live handles from this library.
int32_t sc_polytope_product(const struct ScPolytope *a,
                            const struct ScPolytope *b,
                            struct ScPolytope **out);

// Dimension, or -1 for a null handle.
//
// # Safety
// `p` must be a live handle or null.
int64_t sc_polytope_dim(const struct ScPolytope *p);

// Number of facets, or -1 for a null handle.
//
// # Safety
// `p` must be a live handle or null.
int64_t sc_polytope_num_facets(const struct ScPolytope *p);

// Number of vertices, or -1 for a null handle.
//
// # Safety
// `p` must be a live handle or null.
int64_t sc_polytope_num_vertices(const struct ScPolytope *p);

// Releases a polytope handle; null is ignored.
//
// # Safety
// `p` must come from this library and not be freed twice.
void sc_polytope_free(struct ScPolytope *p);

// Runs the full classification and returns the report JSON.
//
// `charfunc_json` may be null (a small-cover search is attempted instead);
// `cell_guard` of 0 selects the default of 2^20 cells.
//
// # Safety
// `p` must be a live handle; string arguments must be NUL-terminated.
int32_t sc_classify_json(const struct ScPolytope *p,
                         const char *charfunc_json,
                         bool compute_homology,
                         size_t cell_guard,
                         char **out);

// Betti numbers of the quotient complex as JSON `{"b": [...], "euler": e}`.
// With a null `charfunc_json`, the identity gluing (the real moment-angle
// manifold) is used.
//
// # Safety
// As for [`sc_classify_json`].
int32_t sc_betti_json(const struct ScPolytope *p,
                      const char *charfunc_json,
                      size_t cell_guard,
                      char **out);

// Small-cover existence. Returns JSON: either
// `{"exists": true, "charfunc": {...}}` or
// `{"exists": false, "reason": "..."}`.
//
// # Safety
// `p` must be a live handle and `out` a valid pointer.
int32_t sc_exists_small_cover_json(const struct ScPolytope *p, char **out);

// Validates a characteristic function. Sets `*valid` and, when invalid,
// `*failing_vertex` (untouched otherwise).
//
// # Safety
// As for [`sc_classify_json`]; `valid` and `failing_vertex` must be valid.
int32_t sc_validate_charfunc(const struct ScPolytope *p,
                             const char *charfunc_json,
                             bool *valid,
                             size_t *failing_vertex);

// Cross-checks the equivalent real-Bott descriptions; sets `*consistent`.
//
// # Safety
// `p` must be a live handle and `consistent` a valid pointer.
int32_t sc_real_bott_audit(const struct ScPolytope *p, size_t cell_guard, bool *consistent);

// Geodesic normal form of a word (JSON list of facet indices in, same out).
//
// # Safety
// As for [`sc_classify_json`].
int32_t sc_word_reduce_json(const struct ScPolytope *p, const char *word_json, char **out);

// Membership of a word in the fundamental group of the moment-angle
// manifold (`charfunc_json` null) or of the small cover of the given
// characteristic function. Sets `*member`.
//
// # Safety
// As for [`sc_classify_json`]; `member` must be a valid pointer.
int32_t sc_word_member(const struct ScPolytope *p,
                       const char *word_json,
                       const char *charfunc_json,
                       bool *member);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SMALLCOVER_H */

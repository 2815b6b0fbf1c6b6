#ifndef STRONGCOVER_H
#define STRONGCOVER_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum ScStatus {
  SC_STATUS_OK = 0,
  /**
   * Null pointer, bad UTF-8, or an argument out of range.
   */
  SC_STATUS_INVALID_ARGUMENT = 1,
  /**
   * Malformed JSON or instance.
   */
  SC_STATUS_PARSE = 2,
  /**
   * The instance does not meet the algorithm's precondition.
   */
  SC_STATUS_PRECONDITION = 3,
  /**
   * A color graph that must be chordal has an induced hole.
   */
  SC_STATUS_NOT_CHORDAL = 4,
  /**
   * A step guaranteed to succeed failed; the message holds the instance.
   */
  SC_STATUS_THEOREM_VIOLATION = 5,
  /**
   * The instance exceeds an exact-search limit.
   */
  SC_STATUS_SIZE_LIMIT = 6,
  /**
   * A random generator exhausted its retry budget.
   */
  SC_STATUS_RETRIES_EXHAUSTED = 7,
  /**
   * A panic was caught at the boundary.
   */
  SC_STATUS_INTERNAL = 8,
} ScStatus;

/**
 * Opaque multicolored complete graph.
 */
typedef struct ScColoring ScColoring;

/**
 * Opaque strong cover: cliques with pairwise distinct colors.
 */
typedef struct ScCover ScCover;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; empty if none. The
 * pointer stays valid until the next failing call on this thread.
 */
const char *sc_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *sc_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 */
void sc_string_free(char *s);

/**
 * Edgeless coloring of `K_n` with `t` colors.
 */
enum ScStatus sc_coloring_new(size_t n, size_t t, struct ScColoring **out);

/**
 * Parses a coloring, interval family or subtree family from JSON; the
 * latter two are converted to their colorings.
 */
enum ScStatus sc_coloring_from_json(const char *json, struct ScColoring **out);

enum ScStatus sc_coloring_to_json(const struct ScColoring *col, char **out);

/**
 * Adds color `c` (1-based) to the edge `uv` (0-based vertices).
 */
enum ScStatus sc_coloring_add_color(struct ScColoring *col, size_t u, size_t v, size_t c);

/**
 * Number of vertices; 0 for a null handle.
 */
size_t sc_coloring_n(const struct ScColoring *col);

/**
 * Number of colors; 0 for a null handle.
 */
size_t sc_coloring_t(const struct ScColoring *col);

void sc_coloring_free(struct ScColoring *col);

enum ScStatus sc_construct_k5star(struct ScColoring **out);

enum ScStatus sc_construct_k4_two_paths(struct ScColoring **out);

enum ScStatus sc_construct_k8_c4free(struct ScColoring **out);

/**
 * Coloring of the pairwise intersecting t-interval family on `4t - 5`
 * members with no strong cover beyond `3(t - 1)` vertices.
 */
enum ScStatus sc_construct_onefourth(size_t t, struct ScColoring **out);

/**
 * Replaces vertex `i` by an all-colors clique of `sizes[i]` vertices.
 */
enum ScStatus sc_blow_up(const struct ScColoring *col,
                         const size_t *sizes,
                         size_t len,
                         struct ScColoring **out);

/**
 * Whether every `k` vertices span a monochromatic clique.
 */
enum ScStatus sc_is_tk(const struct ScColoring *col, size_t k, bool *out);

/**
 * Greedy cover taking a maximum clique of each color in `order` (a
 * permutation of `1..=t`). Every color graph must be chordal.
 */
enum ScStatus sc_greedy_cover(const struct ScColoring *col,
                              const size_t *order,
                              size_t len,
                              struct ScCover **out);

/**
 * Strong cover of maximum size by exhaustive search; `max_n` caps the
 * instance size.
 */
enum ScStatus sc_exact_max_cover(const struct ScColoring *col, size_t max_n, struct ScCover **out);

/**
 * Fewest cliques in a strong cover of all vertices, or -1 when there is
 * none. `cover_out` may be null; it is set to null when there is no cover.
 */
enum ScStatus sc_theta(const struct ScColoring *col,
                       size_t max_n,
                       ptrdiff_t *theta_out,
                       struct ScCover **cover_out);

/**
 * All-vertex cover of a chordal (3,3)-coloring by at most three cliques.
 */
enum ScStatus sc_strong_cover_33(const struct ScColoring *col, struct ScCover **out);

/**
 * All-vertex cover of a chordal (t,t)-coloring by two cliques for even t
 * and three for odd t.
 */
enum ScStatus sc_strong_cover_tt(const struct ScColoring *col, struct ScCover **out);

/**
 * Cover of at least `4n/5` vertices of a 2-coloring with both classes
 * induced-C4-free and every edge colored.
 */
enum ScStatus sc_strong_cover_c4free22(const struct ScColoring *col, struct ScCover **out);

/**
 * Number of covered vertices; 0 for a null handle.
 */
size_t sc_cover_covered(const struct ScCover *cov);

/**
 * Number of cliques; 0 for a null handle.
 */
size_t sc_cover_cliques(const struct ScCover *cov);

/**
 * JSON `{"assignments": [[color, [vertices]], ...]}`.
 */
enum ScStatus sc_cover_to_json(const struct ScCover *cov, char **out);

void sc_cover_free(struct ScCover *cov);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STRONGCOVER_H */

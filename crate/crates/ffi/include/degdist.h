#ifndef DEGDIST_H
#define DEGDIST_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum DdStatus {
  DD_STATUS_OK = 0,
  // A required pointer argument was null.
  DD_STATUS_NULL_POINTER = 1,
  // Malformed input: bad edge list, weights, placement or kink pattern.
  DD_STATUS_INVALID_INPUT = 2,
  // The method does not apply to this input.
  DD_STATUS_INAPPLICABLE = 3,
  // The exact value does not fit in `int64_t`.
  DD_STATUS_OVERFLOW = 4,
  // An output buffer is too small.
  DD_STATUS_BUFFER_TOO_SMALL = 5,
  // Internal failure; the message has details.
  DD_STATUS_INTERNAL = 6,
} DdStatus;

// Opaque connected simple graph.
typedef struct DdGraph DdGraph;

// Opaque phenylene built from a hexagon placement.
typedef struct DdPhenylene DdPhenylene;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null if none. Valid
// until the next failing call on the same thread.
const char *dd_last_error(void);

// Library version as a static nul-terminated string.
const char *dd_version(void);

// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
// `edges` (`2 * edge_count` entries). The graph must be simple and
// connected.
//
// # Safety
// `edges` must point to `2 * edge_count` readable values; `out` must be
// writable.
enum DdStatus dd_graph_new(size_t n, const size_t *edges, size_t edge_count, struct DdGraph **out);

// The house graph of the given order, one of the bundled families.
//
// # Safety
// `out` must be writable.
enum DdStatus dd_graph_house(size_t n, struct DdGraph **out);

// Releases a graph. Null is ignored.
//
// # Safety
// `g` must come from this library and not be used afterwards.
void dd_graph_free(struct DdGraph *g);

// Vertex count, or 0 for null.
//
// # Safety
// `g` must be null or a live graph.
size_t dd_graph_vertex_count(const struct DdGraph *g);

// Edge count, or 0 for null.
//
// # Safety
// `g` must be null or a live graph.
size_t dd_graph_edge_count(const struct DdGraph *g);

// Wiener index.
//
// # Safety
// `g` must be a live graph and `out` writable.
enum DdStatus dd_wiener(const struct DdGraph *g, int64_t *out);

// Degree distance.
//
// # Safety
// `g` must be a live graph and `out` writable.
enum DdStatus dd_degree_distance(const struct DdGraph *g, int64_t *out);

// Gutman index.
//
// # Safety
// `g` must be a live graph and `out` writable.
enum DdStatus dd_gutman(const struct DdGraph *g, int64_t *out);

// Double-weighted Wiener index with positive integer weights `a` and `b`,
// one per vertex.
//
// # Safety
// `a` and `b` must point to `len` readable values; `out` must be writable.
enum DdStatus dd_wiener_double(const struct DdGraph *g,
                               const int64_t *a,
                               const int64_t *b,
                               size_t len,
                               int64_t *out);

// Degree distance through the quotients by the Θ*-classes.
//
// # Safety
// `g` must be a live graph and `out` writable.
enum DdStatus dd_degree_distance_via_cuts(const struct DdGraph *g, int64_t *out);

// Number of Θ*-classes. When `class_of` is non-null it receives the class
// of every edge, in edge order; `capacity` must be at least the edge count.
//
// # Safety
// `count` must be writable; `class_of`, if non-null, must have room for
// `capacity` values.
enum DdStatus dd_theta_classes(const struct DdGraph *g,
                               size_t *count,
                               size_t *class_of,
                               size_t capacity);

// Whether the graph is a partial cube.
//
// # Safety
// `g` must be a live graph and `out` writable.
enum DdStatus dd_is_partial_cube(const struct DdGraph *g, bool *out);

// Whether the graph is a partial Hamming graph.
//
// # Safety
// `g` must be a live graph and `out` writable.
enum DdStatus dd_is_partial_hamming(const struct DdGraph *g, bool *out);

// Lower bound on the Gutman index, exact on partial Hamming graphs.
//
// # Safety
// `g` must be a live graph and `out` writable.
enum DdStatus dd_gutman_lower_bound(const struct DdGraph *g, int64_t *out);

// Phenylene from `len` hexagon cells in axial coordinates `(q[i], r[i])`.
//
// # Safety
// `q` and `r` must point to `len` readable values; `out` must be writable.
enum DdStatus dd_phenylene_from_cells(const int32_t *q,
                                      const int32_t *r,
                                      size_t len,
                                      struct DdPhenylene **out);

// Phenylene chain of `h` hexagons. `kinks` is a nul-terminated pattern of
// `h - 2` attachments: `L` linear, `+` and `-` angular.
//
// # Safety
// `kinks` must be a valid C string and `out` writable.
enum DdStatus dd_phenylene_chain(size_t h, const char *kinks, struct DdPhenylene **out);

// Releases a phenylene. Null is ignored.
//
// # Safety
// `p` must come from this library and not be used afterwards.
void dd_phenylene_free(struct DdPhenylene *p);

// A copy of the phenylene's graph, to be released with `dd_graph_free`.
//
// # Safety
// `p` must be a live phenylene and `out` writable.
enum DdStatus dd_phenylene_graph(const struct DdPhenylene *p, struct DdGraph **out);

// Degree distance and Gutman index of a phenylene in linear time.
//
// # Safety
// `p` must be a live phenylene; `dd` and `gut` must be writable.
enum DdStatus dd_phenylene_indices(const struct DdPhenylene *p, int64_t *dd, int64_t *gut);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DEGDIST_H */

#ifndef INTERVAL_POWERS_H
#define INTERVAL_POWERS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum IpwStatus {
  IPW_STATUS_OK = 0,
  IPW_STATUS_NULL_POINTER = 1,
  IPW_STATUS_INVALID_VERTEX = 2,
  IPW_STATUS_INVALID_EDGE = 3,
  IPW_STATUS_INVALID_K = 4,
  IPW_STATUS_VERTEX_SET_MISMATCH = 5,
  IPW_STATUS_INVALID_INTERVAL = 6,
  IPW_STATUS_COORDINATE_OVERFLOW = 7,
  IPW_STATUS_NOT_PROPER = 8,
  IPW_STATUS_INFEASIBLE_CONSTRAINTS = 9,
  IPW_STATUS_REPRESENTATION_MISMATCH = 10,
  IPW_STATUS_NON_STRICT_ORDER = 11,
  IPW_STATUS_PARSE = 12,
  IPW_STATUS_BUFFER_TOO_SMALL = 13,
} IpwStatus;

// Opaque simple undirected graph.
typedef struct IpwGraph IpwGraph;

// Opaque interval representation.
typedef struct IpwRepresentation IpwRepresentation;

// Opaque extension trace.
typedef struct IpwTrace IpwTrace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Description of the last failure on this thread, or NULL. The pointer is
// owned by the library and valid until the next call on this thread.
const char *ipw_last_error(void);

// Builds a graph on `n` vertices from `m` edges stored as
// `edges[2*i], edges[2*i+1]` (1-indexed).
enum IpwStatus ipw_graph_new(size_t n, const uint32_t *edges, size_t m, struct IpwGraph **out);

// Parses a graph in the `n m` / `u v` text format.
enum IpwStatus ipw_graph_parse(const char *text, struct IpwGraph **out);

void ipw_graph_free(struct IpwGraph *g);

size_t ipw_graph_vertex_count(const struct IpwGraph *g);

size_t ipw_graph_edge_count(const struct IpwGraph *g);

// Whether 1-indexed vertices `u` and `v` are adjacent.
bool ipw_graph_has_edge(const struct IpwGraph *g, uint32_t u, uint32_t v);

// Copies the edges (ascending, 1-indexed, two entries per edge) into
// `buf`, which must hold `2 * ipw_graph_edge_count(g)` entries.
enum IpwStatus ipw_graph_edges(const struct IpwGraph *g, uint32_t *buf, size_t capacity);

enum IpwStatus ipw_graph_power(const struct IpwGraph *g, size_t k, struct IpwGraph **out);

bool ipw_graph_equal(const struct IpwGraph *a, const struct IpwGraph *b);

// Representation of `n` vertices; vertex `i + 1` gets `[lefts[i], rights[i]]`.
enum IpwStatus ipw_rep_new(size_t n,
                           const int64_t *lefts,
                           const int64_t *rights,
                           struct IpwRepresentation **out);

void ipw_rep_free(struct IpwRepresentation *r);

size_t ipw_rep_len(const struct IpwRepresentation *r);

// Endpoints of 1-indexed vertex `v`.
enum IpwStatus ipw_rep_get(const struct IpwRepresentation *r,
                           uint32_t v,
                           int64_t *left,
                           int64_t *right);

enum IpwStatus ipw_intersection_graph(const struct IpwRepresentation *r, struct IpwGraph **out);

// Whether both representations induce the same left and right orders.
enum IpwStatus ipw_rep_same_orders(const struct IpwRepresentation *a,
                                   const struct IpwRepresentation *b,
                                   bool *same);

bool ipw_rep_is_proper(const struct IpwRepresentation *r);

enum IpwStatus ipw_rep_normalize(const struct IpwRepresentation *r, struct IpwRepresentation **out);

// Unit representation (all lengths `n^2`) with the same graph and orders.
enum IpwStatus ipw_rep_to_unit(const struct IpwRepresentation *r, struct IpwRepresentation **out);

// Extends `r`, a representation of `G^(k-1)`, to one of `G^k`. `out_trace`
// may be NULL when the trace is not wanted.
enum IpwStatus ipw_extend(const struct IpwGraph *g,
                          size_t k,
                          const struct IpwRepresentation *r,
                          struct IpwRepresentation **out_rep,
                          struct IpwTrace **out_trace);

void ipw_trace_free(struct IpwTrace *t);

int64_t ipw_trace_scale(const struct IpwTrace *t);

// Witness (1-indexed, 0 when absent) and new right endpoint of vertex `x`.
enum IpwStatus ipw_trace_entry(const struct IpwTrace *t,
                               uint32_t x,
                               uint32_t *witness,
                               int64_t *new_right);

// Exhaustive search for trapezoid representations of `target` with the
// four orders of the built-in `P5` representation.
enum IpwStatus ipw_p5_order_search(const struct IpwGraph *target,
                                   uint64_t *matches,
                                   uint64_t *candidates);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INTERVAL_POWERS_H */

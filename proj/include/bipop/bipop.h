#ifndef BIPOP_BIPOP_H
#define BIPOP_BIPOP_H

/* C interface to the bipartite outerplanar graph toolkit. Every function
 * that can fail returns a bipop_status; on failure the message is available
 * from bipop_last_error() on the calling thread until the next call.
 * Strings returned through char** are owned by the caller and released with
 * bipop_string_free(). Graph and context handles are immutable after
 * creation and may be shared between threads. */

#include <stddef.h>

#if defined(BIPOP_BUILDING_LIBRARY)
#define BIPOP_API __attribute__((visibility("default")))
#else
#define BIPOP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bipop_status {
  BIPOP_OK = 0,
  BIPOP_INVALID_ARGUMENT = 1,
  BIPOP_PRECONDITION_FAILED = 2,
  BIPOP_CAP_EXCEEDED = 3,
  BIPOP_NOT_CONVERGED = 4,
  BIPOP_INVARIANT_VIOLATION = 5,
  BIPOP_PARSE_ERROR = 6,
  BIPOP_IO_ERROR = 7,
  BIPOP_INTERNAL_ERROR = 8
} bipop_status;

typedef struct bipop_graph bipop_graph;
typedef struct bipop_context bipop_context;

BIPOP_API const char* bipop_version(void);
BIPOP_API const char* bipop_last_error(void);
BIPOP_API const char* bipop_status_string(bipop_status status);
BIPOP_API void bipop_string_free(char* s);

/* Context: tolerances, caps and worker count. config_json may be NULL for
 * the defaults; unknown keys are rejected. */
BIPOP_API bipop_status bipop_context_create(const char* config_json, bipop_context** out);
BIPOP_API bipop_status bipop_context_load(const char* path, bipop_context** out);
BIPOP_API void bipop_context_free(bipop_context* ctx);
BIPOP_API bipop_status bipop_context_config(const bipop_context* ctx, char** out_json);

/* Graphs. edges holds edge_count (u, v) pairs, 0-based. */
BIPOP_API bipop_status bipop_graph_create(int n, const int* edges, size_t edge_count,
                                          bipop_graph** out);
BIPOP_API bipop_status bipop_graph_from_json(const char* json, bipop_graph** out);
BIPOP_API bipop_status bipop_graph_from_graph6(const char* text, bipop_graph** out);
BIPOP_API bipop_status bipop_graph_clone(const bipop_graph* g, bipop_graph** out);
BIPOP_API void bipop_graph_free(bipop_graph* g);
BIPOP_API int bipop_graph_order(const bipop_graph* g);
BIPOP_API int bipop_graph_size(const bipop_graph* g);
/* Writes min(capacity, size) pairs into out (2 ints each); *count = size. */
BIPOP_API bipop_status bipop_graph_edges(const bipop_graph* g, int* out, size_t capacity,
                                         size_t* count);
BIPOP_API bipop_status bipop_graph_to_json(const bipop_graph* g, char** out);
/* with_layout != 0 adds circular positions along the outer cycle when the
 * graph is 2-connected outerplanar. */
BIPOP_API bipop_status bipop_graph_to_dot(const bipop_graph* g, int with_layout, char** out);
BIPOP_API bipop_status bipop_graph_to_graph6(const bipop_graph* g, char** out);

/* Constructions. params_json: {"family": name, ...}. Names and keys:
 *   star, cycle, path, complete, ladder: n
 *   complete_bipartite: a, b
 *   quad_book: s          g1, g2: n, s, unchecked
 *   h_case: i             q_graph
 *   quadrangulation: n, chords [[u, v], ...]     fan: n
 * Optional "pendants": {"root": r, "count": k} applied last. */
BIPOP_API bipop_status bipop_generate(const bipop_context* ctx, const char* params_json,
                                      bipop_graph** out);

/* Recognition report (JSON object). */
BIPOP_API bipop_status bipop_check(const bipop_context* ctx, const bipop_graph* g, char** out);

/* {"rho", "lambda", "eigenvalues", "vector", "residual", "disconnected"}. */
BIPOP_API bipop_status bipop_spectrum(const bipop_context* ctx, const bipop_graph* g,
                                      char** out);

/* poly: coefficients highest degree first. y may be NULL for all ones. */
BIPOP_API bipop_status bipop_certify(const bipop_context* ctx, const bipop_graph* g,
                                     const double* poly, size_t poly_len, const double* y,
                                     size_t y_len, double r, char** out);

/* kind: even_edge_most, odd_edge_most, maximal_2conn, pendant, star. */
BIPOP_API bipop_status bipop_bound(const char* kind, int n, int eps, double* out);

/* G - sum v t + sum u t; report includes the rotated graph. */
BIPOP_API bipop_status bipop_rotate(const bipop_context* ctx, const bipop_graph* g, int u, int v,
                                    const int* targets, size_t target_count, char** out);

BIPOP_API bipop_status bipop_floor(const bipop_context* ctx, const bipop_graph* g, char** out);

/* Enumeration. spec_json: {"family", "n", "iso_reduce", "cap"}. The callback
 * sees each graph in canonical order; a nonzero return stops the stream.
 * The graph handle is only valid during the callback. */
typedef int (*bipop_graph_callback)(const bipop_graph* g, void* user);
BIPOP_API bipop_status bipop_enumerate(const bipop_context* ctx, const char* spec_json,
                                       bipop_graph_callback callback, void* user,
                                       int* truncated);

/* spec_json adds "objective": "max_rho" | "min_lambda" and "table": k. */
BIPOP_API bipop_status bipop_scan(const bipop_context* ctx, const char* spec_json, char** out);
BIPOP_API bipop_status bipop_census(const bipop_context* ctx, const char* spec_json, char** out);

/* params_json: {"n_lo", "n_hi", "samples", "seed"} or NULL. *passed is set
 * to 1 when no checked statement failed. */
BIPOP_API bipop_status bipop_verify(const bipop_context* ctx, const char* suite,
                                    const char* params_json, char** out, int* passed);
BIPOP_API bipop_status bipop_suite_names(char** out_json);

#ifdef __cplusplus
}
#endif

#endif

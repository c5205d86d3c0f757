#ifndef TRISPEC_H
#define TRISPEC_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum TsStatus {
  TS_STATUS_OK = 0,
  TS_STATUS_NULL_POINTER = 1,
  TS_STATUS_INVALID_UTF8 = 2,
  TS_STATUS_PARSE = 3,
  TS_STATUS_OUT_OF_RANGE = 4,
  TS_STATUS_NOT_RANK3 = 5,
  TS_STATUS_NO_ORACLE = 6,
  TS_STATUS_CAP_EXCEEDED = 7,
  TS_STATUS_INVALID_GRAPH = 8,
  TS_STATUS_ORACLE = 9,
  TS_STATUS_INVALID_ARGUMENT = 10,
  TS_STATUS_INTERNAL = 11,
} TsStatus;

/**
 * Adjacency matrix of a simple graph.
 */
typedef struct TsGraph TsGraph;

/**
 * Exact spectrum with its vertex count.
 */
typedef struct TsSpectrum TsSpectrum;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Free with `ts_string_free`.
 */
char *ts_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void ts_string_free(char *s);

/**
 * Closed-form spectrum of a central type such as `"PR4(h=0,m=3)"`.
 *
 * # Safety
 * `ct_name` must be a NUL-terminated string; `out` must be writable.
 */
enum TsStatus ts_catalog_spectrum(const char *ct_name, struct TsSpectrum **out);

/**
 * Minimal eigenvalue of a central type.
 *
 * # Safety
 * `ct_name` must be a NUL-terminated string; `out` must be writable.
 */
enum TsStatus ts_catalog_min_eigenvalue(const char *ct_name, int64_t *out);

/**
 * Extended parameters as JSON; `codiagram` selects the complement.
 *
 * # Safety
 * `ct_name` must be a NUL-terminated string; `out` must be writable.
 */
enum TsStatus ts_catalog_params_json(const char *ct_name, bool codiagram, char **out);

/**
 * # Safety
 * `s` must be null or a handle from this library that has not been freed.
 */
void ts_spectrum_free(struct TsSpectrum *s);

/**
 * Number of vertices; 0 for a null handle.
 *
 * # Safety
 * `s` must be null or a live handle.
 */
uint64_t ts_spectrum_size(const struct TsSpectrum *s);

/**
 * Number of distinct entries, the degree included; 0 for a null handle.
 *
 * # Safety
 * `s` must be null or a live handle.
 */
size_t ts_spectrum_entry_count(const struct TsSpectrum *s);

/**
 * Entry `index` (0 is the degree) as `num/den` with its multiplicity.
 *
 * # Safety
 * `s` must be a live handle; the outputs must be writable.
 */
enum TsStatus ts_spectrum_entry(const struct TsSpectrum *s,
                                size_t index,
                                int64_t *num,
                                int64_t *den,
                                uint64_t *mult);

/**
 * Display form, e.g. `<32; [4]^27, [-4]^35>`. Null for a null handle.
 *
 * # Safety
 * `s` must be null or a live handle.
 */
char *ts_spectrum_to_string(const struct TsSpectrum *s);

/**
 * JSON form. Null for a null handle.
 *
 * # Safety
 * `s` must be null or a live handle.
 */
char *ts_spectrum_to_json(const struct TsSpectrum *s);

/**
 * Exact equality of two spectra and their vertex counts.
 *
 * # Safety
 * Both arguments must be null or live handles.
 */
bool ts_spectrum_equal(const struct TsSpectrum *a, const struct TsSpectrum *b);

/**
 * Builds the diagram of a central type with at most `cap` vertices.
 *
 * # Safety
 * `ct_name` must be a NUL-terminated string; `out` must be writable.
 */
enum TsStatus ts_graph_construct(const char *ct_name, size_t cap, struct TsGraph **out);

/**
 * Graph from a row-major `n * n` 0/1 matrix, which must be symmetric with zero diagonal.
 *
 * # Safety
 * `data` must point to `n * n` readable bytes; `out` must be writable.
 */
enum TsStatus ts_graph_from_adjacency(size_t n, const uint8_t *data, struct TsGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library that has not been freed.
 */
void ts_graph_free(struct TsGraph *g);

/**
 * Number of vertices; 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t ts_graph_order(const struct TsGraph *g);

/**
 * Adjacency test; false for a null handle or out-of-range vertices.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
bool ts_graph_has_edge(const struct TsGraph *g, size_t i, size_t j);

/**
 * Edge list with a `p edge n m` header.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum TsStatus ts_graph_to_dimacs(const struct TsGraph *g, char **out);

/**
 * Exact spectrum of a regular graph with integral eigenvalues and at most `cap` vertices.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum TsStatus ts_graph_spectrum(const struct TsGraph *g, size_t cap, struct TsSpectrum **out);

/**
 * Builds the diagram and compares its exact spectrum with the catalog.
 *
 * # Safety
 * `ct_name` must be a NUL-terminated string; `matches` must be writable.
 */
enum TsStatus ts_verify(const char *ct_name, size_t cap, bool *matches);

/**
 * Enumeration report for minimal eigenvalue at least `-t`, as JSON.
 *
 * # Safety
 * `out` must be writable.
 */
enum TsStatus ts_enumerate_json(uint64_t t, char **out);

/**
 * Matsuo candidates for `eta` written `"p/q"`, as JSON.
 *
 * # Safety
 * `eta` must be a NUL-terminated string; `out` must be writable.
 */
enum TsStatus ts_matsuo_json(const char *eta, bool symplectic_only, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRISPEC_H */

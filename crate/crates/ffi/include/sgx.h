#ifndef SGX_H
#define SGX_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of a fallible call.
 */
typedef enum SgxStatus {
  SGX_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  SGX_STATUS_NULL_ARGUMENT = 1,
  /**
   * Input text was not valid UTF-8.
   */
  SGX_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed sg6 input.
   */
  SGX_STATUS_PARSE_ERROR = 3,
  /**
   * Precondition violation (bad parameters, wrong orders, ...).
   */
  SGX_STATUS_DOMAIN_ERROR = 4,
  /**
   * A size or resource guard was exceeded.
   */
  SGX_STATUS_CAPABILITY_ERROR = 5,
  /**
   * The eigensolver did not converge.
   */
  SGX_STATUS_CONVERGENCE_ERROR = 6,
  /**
   * An independent re-check failed.
   */
  SGX_STATUS_VERIFICATION_ERROR = 7,
  /**
   * The provided output buffer is too small.
   */
  SGX_STATUS_BUFFER_TOO_SMALL = 8,
} SgxStatus;

/**
 * Opaque signed-graph handle.
 */
typedef struct SgxGraph SgxGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Decodes one sg6 line into a new graph handle.
 *
 * # Safety
 * `line` must be a valid NUL-terminated C string; `out` must be a valid
 * pointer to an `SgxGraph*` slot.
 */
enum SgxStatus sgx_graph_from_sg6(const char *line, struct SgxGraph **out);

/**
 * Encodes a graph as a newly allocated sg6 C string (NULL on null input);
 * free it with [`sgx_string_free`].
 *
 * # Safety
 * `g` must be null or a live handle from this library.
 */
char *sgx_graph_to_sg6(const struct SgxGraph *g);

/**
 * Frees a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be a pointer previously returned by this library and not yet
 * freed.
 */
void sgx_string_free(char *s);

/**
 * Frees a graph handle. NULL is ignored.
 *
 * # Safety
 * `g` must be a handle returned by this library and not yet freed.
 */
void sgx_graph_free(struct SgxGraph *g);

/**
 * Deep-copies a handle (NULL in, NULL out).
 *
 * # Safety
 * `g` must be null or a live handle from this library.
 */
struct SgxGraph *sgx_graph_clone(const struct SgxGraph *g);

/**
 * Builds `Gamma_{s,n}`.
 *
 * # Safety
 * `out` must be a valid pointer to an `SgxGraph*` slot.
 */
enum SgxStatus sgx_gamma(size_t s, size_t n, struct SgxGraph **out);

/**
 * Builds `Sigma_{k,n}` with clique parameter `r`.
 *
 * # Safety
 * `out` must be a valid pointer to an `SgxGraph*` slot.
 */
enum SgxStatus sgx_sigma(size_t k, size_t r, size_t n, struct SgxGraph **out);

/**
 * Builds the all-positive complete graph.
 *
 * # Safety
 * `out` must be a valid pointer to an `SgxGraph*` slot.
 */
enum SgxStatus sgx_complete_positive(size_t n, struct SgxGraph **out);

/**
 * Builds the complete graph with exactly one negative edge.
 *
 * # Safety
 * `out` must be a valid pointer to an `SgxGraph*` slot.
 */
enum SgxStatus sgx_complete_one_negative(size_t n, struct SgxGraph **out);

/**
 * Number of vertices (0 for NULL).
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t sgx_graph_order(const struct SgxGraph *g);

/**
 * Number of edges (0 for NULL).
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t sgx_graph_size(const struct SgxGraph *g);

/**
 * Number of negative edges (0 for NULL).
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t sgx_graph_negative_edges(const struct SgxGraph *g);

/**
 * Balance test.
 *
 * # Safety
 * `g` must be a live handle; `out` a valid `bool` slot.
 */
enum SgxStatus sgx_graph_is_balanced(const struct SgxGraph *g, bool *out);

/**
 * Connectivity test.
 *
 * # Safety
 * `g` must be a live handle; `out` a valid `bool` slot.
 */
enum SgxStatus sgx_graph_is_connected(const struct SgxGraph *g, bool *out);

/**
 * Largest adjacency eigenvalue.
 *
 * # Safety
 * `g` must be a live handle; `out` a valid `double` slot.
 */
enum SgxStatus sgx_graph_index(const struct SgxGraph *g, double *out);

/**
 * `max(lambda_1, -lambda_n)`.
 *
 * # Safety
 * `g` must be a live handle; `out` a valid `double` slot.
 */
enum SgxStatus sgx_graph_spectral_radius(const struct SgxGraph *g, double *out);

/**
 * Writes all eigenvalues, descending, into `buf` (capacity `len`; must be
 * at least the graph order).
 *
 * # Safety
 * `g` must be a live handle; `buf` must point to `len` writable doubles.
 */
enum SgxStatus sgx_graph_eigenvalues(const struct SgxGraph *g, double *buf, size_t len);

/**
 * Switches at the vertex set given as a bitmask (bit v = vertex v).
 *
 * # Safety
 * `g` must be a live handle; `out` a valid `SgxGraph*` slot.
 */
enum SgxStatus sgx_graph_switch_mask(const struct SgxGraph *g,
                                     uint64_t mask,
                                     struct SgxGraph **out);

/**
 * Canonical switching-class representative (same labeled graph).
 *
 * # Safety
 * `g` must be a live handle; `out` a valid `SgxGraph*` slot.
 */
enum SgxStatus sgx_graph_canonical_signature(const struct SgxGraph *g, struct SgxGraph **out);

/**
 * Canonical representative of the switching-isomorphism class
 * (canonical labeling plus minimal canonical signature).
 *
 * # Safety
 * `g` must be a live handle; `out` a valid `SgxGraph*` slot.
 */
enum SgxStatus sgx_graph_canonical_form(const struct SgxGraph *g, struct SgxGraph **out);

/**
 * Switching equivalence of two signatures of the same labeled graph.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` a valid `bool` slot.
 */
enum SgxStatus sgx_switching_equivalent(const struct SgxGraph *a,
                                        const struct SgxGraph *b,
                                        bool *out);

/**
 * Switching isomorphism (relabeling plus switching).
 *
 * # Safety
 * `a` and `b` must be live handles; `out` a valid `bool` slot.
 */
enum SgxStatus sgx_switching_isomorphic(const struct SgxGraph *a,
                                        const struct SgxGraph *b,
                                        bool *out);

/**
 * Number of unbalanced 4-cliques (distinct vertex sets).
 *
 * # Safety
 * `g` must be a live handle; `out` a valid `uint64_t` slot.
 */
enum SgxStatus sgx_count_unbalanced_k4(const struct SgxGraph *g, uint64_t *out);

/**
 * `tK4`-freeness: fewer than `t` unbalanced 4-cliques.
 *
 * # Safety
 * `g` must be a live handle; `out` a valid `bool` slot.
 */
enum SgxStatus sgx_is_tk4_free(const struct SgxGraph *g, uint64_t t, bool *out);

/**
 * Order of the largest balanced clique.
 *
 * # Safety
 * `g` must be a live handle; `out` a valid `size_t` slot.
 */
enum SgxStatus sgx_balanced_clique_number(const struct SgxGraph *g, size_t *out);

/**
 * Index of `Gamma_{s,n}` as the largest root of its cubic.
 *
 * # Safety
 * `out` must be a valid `double` slot.
 */
enum SgxStatus sgx_lambda1_gamma(size_t s, size_t n, double *out);

/**
 * `r(t) = (1 + sqrt(8t-7))/2` when integral; DomainError otherwise.
 *
 * # Safety
 * `out` must be a valid `uint64_t` slot.
 */
enum SgxStatus sgx_r_of_t(uint64_t t, uint64_t *out);

/**
 * `t(r) = r(r-1)/2 + 1`.
 */
uint64_t sgx_t_of_r(uint64_t r);

/**
 * Runs an extremal search over unbalanced graphs of order `n` in the
 * `tK4`-free family and returns the certificate as a JSON string (free
 * with [`sgx_string_free`]); NULL on failure.
 *
 * # Safety
 * Pointer-free except the returned string; always safe to call.
 */
char *sgx_search_tk4_json(size_t n, uint64_t t, size_t jobs);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SGX_H */

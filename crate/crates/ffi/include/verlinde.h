#ifndef VERLINDE_H
#define VERLINDE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum VerlindeStatus {
  VERLINDE_STATUS_OK = 0,
  // A required pointer was null or a string was not UTF-8.
  VERLINDE_STATUS_NULL_OR_UTF8 = 1,
  // The library rejected the input.
  VERLINDE_STATUS_INVALID_INPUT = 2,
  // Valid input outside what the library can compute.
  VERLINDE_STATUS_UNSUPPORTED = 3,
  // Internal panic; the library state is still usable.
  VERLINDE_STATUS_PANIC = 4,
} VerlindeStatus;

// A GL(X) shape: characteristic plus block multiplicities.
typedef struct VerlindeShape VerlindeShape;

// An object of Ver_p, a direct sum of simples L_1..L_{p-1}.
typedef struct VerlindeVerp VerlindeVerp;

// A weight of GL(X) for a fixed shape.
typedef struct VerlindeWeight VerlindeWeight;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. Valid until the
// next library call on the same thread; do not free.
const char *verlinde_last_error(void);

void verlinde_string_free(char *s);

// The simple object L_k of Ver_p, 1 <= k <= p-1.
enum VerlindeStatus verlinde_verp_simple(uint32_t p, size_t k, struct VerlindeVerp **out);

enum VerlindeStatus verlinde_verp_fuse(const struct VerlindeVerp *a,
                                       const struct VerlindeVerp *b,
                                       struct VerlindeVerp **out);

enum VerlindeStatus verlinde_verp_direct_sum(const struct VerlindeVerp *a,
                                             const struct VerlindeVerp *b,
                                             struct VerlindeVerp **out);

// Multiplicity of L_k; 0 for k outside 1..p-1 or a null handle.
uint64_t verlinde_verp_multiplicity(const struct VerlindeVerp *obj, size_t k);

// Numerical quantum dimension, categorical dimension in F_p, and the
// integer dimension of the Jordan-model lift.
enum VerlindeStatus verlinde_verp_dims(const struct VerlindeVerp *obj,
                                       double *out_qdim,
                                       uint32_t *out_catdim,
                                       uint64_t *out_dim);

// JSON object `{"L1": m1, ...}` listing nonzero multiplicities.
enum VerlindeStatus verlinde_verp_to_json(const struct VerlindeVerp *obj, char **out);

void verlinde_verp_free(struct VerlindeVerp *obj);

// Shape from a summand list such as `"L1:2,L3:1"`.
enum VerlindeStatus verlinde_shape_parse(uint32_t p, const char *spec, struct VerlindeShape **out);

size_t verlinde_shape_rank(const struct VerlindeShape *shape);

void verlinde_shape_free(struct VerlindeShape *shape);

// Weight from `"12,3|0"` (blocks separated by `|`) or a flat list.
enum VerlindeStatus verlinde_weight_parse(const struct VerlindeShape *shape,
                                          const char *text,
                                          struct VerlindeWeight **out);

// Copy up to `cap` entries into `buf`; returns the total number of entries.
size_t verlinde_weight_entries(const struct VerlindeWeight *w, int64_t *buf, size_t cap);

enum VerlindeStatus verlinde_weight_to_string(const struct VerlindeWeight *w, char **out);

// Split a dominant weight as base + p * mu with base restricted.
enum VerlindeStatus verlinde_weight_decompose(const struct VerlindeWeight *w,
                                              struct VerlindeWeight **out_base,
                                              struct VerlindeWeight **out_mu);

void verlinde_weight_free(struct VerlindeWeight *w);

// Ver_p(SL(n)) product of two partitions (`"2,1"`), as the CLI's JSON.
enum VerlindeStatus verlinde_sln_fuse_json(uint32_t p,
                                           uint32_t n,
                                           const char *lambda,
                                           const char *mu,
                                           char **out);

// Steinberg factorization of (weight, v) as JSON. `v` may be null for the
// trivial tuple.
enum VerlindeStatus verlinde_factorize_json(uint32_t p,
                                            const char *shape,
                                            const char *weight,
                                            const char *v,
                                            char **out);

// Dimension data of the r-th Frobenius kernel's coordinate ring as JSON.
enum VerlindeStatus verlinde_kernel_dim_json(uint32_t p, const char *shape, uint32_t r, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VERLINDE_H */

#ifndef S3HARM_H
#define S3HARM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define S3H_MANIFOLD_C2 2

#define S3H_MANIFOLD_C3 3

#define S3H_SUITE_GROUP 0

#define S3H_SUITE_BASIS 1

#define S3H_SUITE_INDUCED 2

#define S3H_SUITE_ALL 3

typedef enum S3hStatus {
  S3H_STATUS_OK = 0,
  S3H_STATUS_NULL_POINTER = 1,
  S3H_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The point passed in is not on the unit sphere.
   */
  S3H_STATUS_NOT_ON_SPHERE = 3,
  /**
   * `s3h_verify` ran and at least one check failed.
   */
  S3H_STATUS_VERIFICATION_FAILED = 4,
  /**
   * An internal panic was caught.
   */
  S3H_STATUS_INTERNAL = 5,
} S3hStatus;

/**
 * Opaque handle to the periodic basis at one degree.
 */
typedef struct S3hBasis S3hBasis;

/**
 * Opaque deck group handle.
 */
typedef struct S3hDeckGroup S3hDeckGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version, a static NUL-terminated string.
 */
const char *s3h_version(void);

/**
 * Message for the last failure on this thread, or NULL. The pointer stays
 * valid until the next `s3h_` call on the same thread.
 */
const char *s3h_last_error(void);

/**
 * Number of deck-periodic harmonics of degree `twice_j`.
 *
 * # Safety
 * `out` must be NULL or point to writable memory for one `uint64_t`.
 */
enum S3hStatus s3h_multiplicity(uint32_t manifold_code, uint32_t twice_j, uint64_t *out);

/**
 * `χ^j` of a rotation by `phi`.
 *
 * # Safety
 * `out` must be NULL or point to writable memory for one `double`.
 */
enum S3hStatus s3h_su2_character(uint32_t twice_j, double phi, double *out);

/**
 * # Safety
 * `out` must be NULL or point to writable memory for one pointer.
 */
enum S3hStatus s3h_deck_group_new(uint32_t manifold_code, struct S3hDeckGroup **out);

/**
 * # Safety
 * `group` must be NULL or a handle from `s3h_deck_group_new` not yet freed.
 */
void s3h_deck_group_free(struct S3hDeckGroup *group);

/**
 * Order of the group; 0 for a NULL handle.
 *
 * # Safety
 * `group` must be NULL or a live handle.
 */
size_t s3h_deck_group_order(const struct S3hDeckGroup *group);

/**
 * Signs and one-line permutation of element `index`; the action is
 * `y_i = signs[i] * x[perm[i]]`.
 *
 * # Safety
 * `group` must be a live handle, `signs` and `perm` NULL or writable for 4 entries.
 */
enum S3hStatus s3h_deck_group_element(const struct S3hDeckGroup *group,
                                      size_t index,
                                      int8_t *signs,
                                      uint8_t *perm);

/**
 * `y = g_index(x)` for `x` on the unit sphere.
 *
 * # Safety
 * `group` must be a live handle, `x` readable and `y` writable for 4 doubles.
 */
enum S3hStatus s3h_deck_group_apply(const struct S3hDeckGroup *group,
                                    size_t index,
                                    const double *x,
                                    double *y);

/**
 * # Safety
 * `out` must be NULL or point to writable memory for one pointer.
 */
enum S3hStatus s3h_basis_new(uint32_t manifold_code, uint32_t j, struct S3hBasis **out);

/**
 * # Safety
 * `b` must be NULL or a handle from `s3h_basis_new` not yet freed.
 */
void s3h_basis_free(struct S3hBasis *b);

/**
 * Number of basis functions; 0 for a NULL handle.
 *
 * # Safety
 * `b` must be NULL or a live handle.
 */
size_t s3h_basis_len(const struct S3hBasis *b);

/**
 * Value of basis function `index` at the point `x` of the unit sphere.
 *
 * # Safety
 * `b` must be a live handle, `x` readable for 4 doubles, `re` and `im` writable.
 */
enum S3hStatus s3h_basis_eval(const struct S3hBasis *b,
                              size_t index,
                              const double *x,
                              double *re,
                              double *im);

/**
 * The basis as a JSON document; free the result with `s3h_string_free`.
 *
 * # Safety
 * `b` must be a live handle and `out` writable for one pointer.
 */
enum S3hStatus s3h_basis_to_json(const struct S3hBasis *b, char **out);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be NULL or a string from an `s3h_` out-parameter not yet freed.
 */
void s3h_string_free(char *s);

/**
 * Runs a verification suite. Returns `Ok` if every check passed and
 * `VerificationFailed` otherwise; if `report_json` is not NULL it receives
 * the reports as JSON.
 *
 * # Safety
 * `report_json` must be NULL or writable for one pointer.
 */
enum S3hStatus s3h_verify(uint32_t suite,
                          uint32_t j_max,
                          uint64_t seed,
                          double tol,
                          char **report_json);

/**
 * Copies `s3h_last_error` into a caller buffer; returns the length needed
 * including the terminating NUL (0 if there is no error).
 *
 * # Safety
 * `buf` must be NULL or writable for `len` bytes.
 */
size_t s3h_last_error_copy(char *buf, size_t len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* S3HARM_H */

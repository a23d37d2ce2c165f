/* C interface to the mondepth monomial-ideal invariants library. */

#ifndef MONDEPTH_H
#define MONDEPTH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every FFI entry point.
 */
typedef enum MdStatus {
  MD_STATUS_OK = 0,
  MD_STATUS_NULL_POINTER = 1,
  MD_STATUS_INVALID_UTF8 = 2,
  MD_STATUS_PARSE_ERROR = 3,
  MD_STATUS_INVALID_INPUT = 4,
  MD_STATUS_CAP_EXCEEDED = 5,
  /**
   * The sdepth search budget ran out; no exact value is available.
   */
  MD_STATUS_INDETERMINATE = 6,
  MD_STATUS_PANIC = 7,
} MdStatus;

/**
 * Which module the Stanley depth refers to.
 */
typedef enum MdMode {
  MD_MODE_IDEAL = 0,
  MD_MODE_QUOTIENT = 1,
} MdMode;

/**
 * Opaque handle to a monomial ideal in canonical form.
 */
typedef struct MdIdeal MdIdeal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parse an ideal from the two-line text format (`/` may replace newlines).
 * On success writes a fresh handle to `out`; free it with `md_ideal_free`.
 *
 * # Safety
 * `text` must point to a NUL-terminated string and `out` must be valid.
 */
enum MdStatus md_ideal_parse(const char *text, struct MdIdeal **out);

/**
 * Release a handle returned by `md_ideal_parse` or `md_modify`.
 *
 * # Safety
 * `ideal` must be a handle from this library, or null (a no-op).
 */
void md_ideal_free(struct MdIdeal *ideal);

/**
 * Render the canonical text form. The returned string must be released
 * with `md_string_free`.
 *
 * # Safety
 * `ideal` must be a live handle and `out` a valid pointer.
 */
enum MdStatus md_ideal_render(const struct MdIdeal *ideal, char **out);

/**
 * Release a string returned by `md_ideal_render`.
 *
 * # Safety
 * `s` must come from this library, or be null (a no-op).
 */
void md_string_free(char *s);

/**
 * Number of minimal generators.
 *
 * # Safety
 * `ideal` must be a live handle and `out` valid.
 */
enum MdStatus md_num_gens(const struct MdIdeal *ideal, int64_t *out);

/**
 * The size and bigsize invariants together with the cover count `a` and
 * total height `b`.
 *
 * # Safety
 * `ideal` must be a live handle; output pointers must be valid.
 */
enum MdStatus md_size(const struct MdIdeal *ideal,
                      int64_t *a,
                      int64_t *b,
                      int64_t *size,
                      int64_t *bigsize);

/**
 * depth(S/I) and depth(I) over the field of the given characteristic
 * (0 for the rationals).
 *
 * # Safety
 * `ideal` must be a live handle; output pointers must be valid.
 */
enum MdStatus md_depth(const struct MdIdeal *ideal,
                       uint64_t characteristic,
                       int64_t *depth_quotient,
                       int64_t *depth_ideal);

/**
 * Exact Stanley depth of the ideal or the quotient. `mode` is an `MdMode`
 * value passed as a plain integer so out-of-range values are rejected
 * rather than trusted. A zero `budget` or `box_cap` selects the default
 * limits. Returns `MD_STATUS_INDETERMINATE` when the search budget runs
 * out before the value is exact.
 *
 * # Safety
 * `ideal` must be a live handle and `out` valid.
 */
enum MdStatus md_sdepth(const struct MdIdeal *ideal,
                        int32_t mode,
                        uint64_t budget,
                        uint64_t box_cap,
                        int64_t *out);

/**
 * Trivial modification `I^alpha` of a squarefree ideal. Writes a fresh
 * handle on success.
 *
 * # Safety
 * `ideal` must be a live handle, `alpha` must point to `alpha_len` entries,
 * and `out` must be valid.
 */
enum MdStatus md_modify(const struct MdIdeal *ideal,
                        const uint32_t *alpha,
                        uintptr_t alpha_len,
                        struct MdIdeal **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MONDEPTH_H */

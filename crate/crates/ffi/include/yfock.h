#ifndef YFOCK_H
#define YFOCK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Norm computation route for `yfock_jack_norm`.
 */
typedef enum YfockNormMethod {
  YFOCK_NORM_METHOD_FORMULA = 0,
  YFOCK_NORM_METHOD_GRAM_SCHMIDT = 1,
} YfockNormMethod;

/**
 * Status codes.
 */
typedef enum YfockStatus {
  YFOCK_STATUS_OK = 0,
  YFOCK_STATUS_NULL_POINTER = 1,
  YFOCK_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed partition or rational function.
   */
  YFOCK_STATUS_PARSE = 3,
  /**
   * Valid input outside the supported domain (bad N, bad index, division by zero).
   */
  YFOCK_STATUS_DOMAIN = 4,
  /**
   * A relation check ran and reported a failure.
   */
  YFOCK_STATUS_CHECK_FAILED = 5,
  /**
   * Command-line usage error in `yfock_run`.
   */
  YFOCK_STATUS_USAGE = 6,
  YFOCK_STATUS_PANIC = 7,
} YfockStatus;

/**
 * Opaque partition.
 */
typedef struct YfockPartition YfockPartition;

/**
 * Opaque element of Q(e1, e2).
 */
typedef struct YfockRatFun YfockRatFun;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread; empty after a success.
 * Valid until the next call on the same thread.
 */
const char *yfock_last_error(void);

/**
 * Version string, e.g. `0.1.0 (variables: e1, e2)`. Static; do not free.
 */
const char *yfock_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void yfock_string_free(char *s);

/**
 * Parses `"3,1"` (empty string for the empty partition).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` a valid pointer.
 */
enum YfockStatus yfock_partition_parse(const char *text, struct YfockPartition **out);

/**
 * # Safety
 * `p` must come from `yfock_partition_parse` and not have been freed.
 */
void yfock_partition_free(struct YfockPartition *p);

/**
 * # Safety
 * `p` a live handle, `out` a valid pointer.
 */
enum YfockStatus yfock_partition_size(const struct YfockPartition *p, size_t *out);

/**
 * Canonical text form of a partition.
 *
 * # Safety
 * `p` a live handle, `out` a valid pointer.
 */
enum YfockStatus yfock_partition_to_string(const struct YfockPartition *p, char **out);

/**
 * Parses a rational function in `e1`, `e2`, e.g. `(e1 + 2*e2)/(e1 - e2)`.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` a valid pointer.
 */
enum YfockStatus yfock_ratfun_parse(const char *text, struct YfockRatFun **out);

/**
 * # Safety
 * `r` must come from this library and not have been freed.
 */
void yfock_ratfun_free(struct YfockRatFun *r);

/**
 * Canonical text form.
 *
 * # Safety
 * `r` a live handle, `out` a valid pointer.
 */
enum YfockStatus yfock_ratfun_to_string(const struct YfockRatFun *r, char **out);

/**
 * Exact equality; writes 1 or 0.
 *
 * # Safety
 * `a`, `b` live handles, `out` a valid pointer.
 */
enum YfockStatus yfock_ratfun_equal(const struct YfockRatFun *a,
                                    const struct YfockRatFun *b,
                                    int *out);

/**
 * `a * b` as a new handle.
 *
 * # Safety
 * `a`, `b` live handles, `out` a valid pointer.
 */
enum YfockStatus yfock_ratfun_mul(const struct YfockRatFun *a,
                                  const struct YfockRatFun *b,
                                  struct YfockRatFun **out);

/**
 * `a + b` as a new handle.
 *
 * # Safety
 * `a`, `b` live handles, `out` a valid pointer.
 */
enum YfockStatus yfock_ratfun_add(const struct YfockRatFun *a,
                                  const struct YfockRatFun *b,
                                  struct YfockRatFun **out);

/**
 * Norm of the Jack(gl_N) function `P_lambda`.
 *
 * # Safety
 * `p` a live handle, `out` a valid pointer.
 */
enum YfockStatus yfock_jack_norm(const struct YfockPartition *p,
                                 size_t n,
                                 enum YfockNormMethod method,
                                 struct YfockRatFun **out);

/**
 * Schur expansion of `P_lambda` as JSON.
 *
 * # Safety
 * `p` a live handle, `out` a valid pointer.
 */
enum YfockStatus yfock_jack_json(const struct YfockPartition *p, size_t n, char **out);

/**
 * Runs the command-line program on `argv[0..argc]` (without the program
 * name) and returns its standard output. The status maps the exit code:
 * 0 ok, 1 `CHECK_FAILED`, 2 `USAGE`, 3 `DOMAIN`. `out` is set on every
 * status except null/UTF-8 errors.
 *
 * # Safety
 * `argv` must hold `argc` NUL-terminated strings; `out` a valid pointer.
 */
enum YfockStatus yfock_run(size_t argc, const char *const *argv, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* YFOCK_H */

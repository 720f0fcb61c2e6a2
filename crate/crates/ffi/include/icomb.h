#ifndef ICOMB_H
#define ICOMB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum IcombStatus {
  ICOMB_STATUS_OK = 0,
  ICOMB_STATUS_NULL_POINTER = 1,
  ICOMB_STATUS_INVALID_UTF8 = 2,
  ICOMB_STATUS_PARSE = 3,
  ICOMB_STATUS_INVALID_ARGUMENT = 4,
  ICOMB_STATUS_SIZE_CAP = 5,
  ICOMB_STATUS_DIVISION_BY_ZERO = 6,
  ICOMB_STATUS_NOT_DIVISIBLE = 7,
  ICOMB_STATUS_DIMENSION_MISMATCH = 8,
  /**
   * The command ran but at least one of its checks failed.
   */
  ICOMB_STATUS_CHECK_FAILED = 9,
  /**
   * Bad command-line arguments given to [`icomb_run`].
   */
  ICOMB_STATUS_USAGE = 10,
  ICOMB_STATUS_INTERNAL = 11,
  ICOMB_STATUS_PANIC = 12,
} IcombStatus;

/**
 * Dense rational matrix.
 */
typedef struct IcombMatrix IcombMatrix;

/**
 * Exchange quiver.
 */
typedef struct IcombQuiver IcombQuiver;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the next call.
 */
const char *icomb_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void icomb_string_free(char *s);

/**
 * Runs one command line, for example `["asm", "count", "--n", "3"]` (no program name).
 * Writes the report (or usage text) to `out` and the process exit code to `exit_code`.
 * Returns `CheckFailed` when the report contains a failing check.
 *
 * # Safety
 * `argv` must point to `argc` valid strings; `out` and `exit_code` must be writable.
 */
enum IcombStatus icomb_run(int argc, const char *const *argv, char **out, int *exit_code);

/**
 * `A_n` as a decimal string.
 *
 * # Safety
 * `out` must be writable.
 */
enum IcombStatus icomb_asm_count(uint32_t n, char **out);

/**
 * Parses a matrix from JSON: an array of rows or `{"entries": [...]}`, entries `"p/q"` or integers.
 *
 * # Safety
 * `json` must be a valid string; `out` must be writable.
 */
enum IcombStatus icomb_matrix_from_json(const char *json, struct IcombMatrix **out);

/**
 * # Safety
 * `m` must be null or a live handle from [`icomb_matrix_from_json`].
 */
void icomb_matrix_free(struct IcombMatrix *m);

/**
 * Number of rows and columns.
 *
 * # Safety
 * `m` must be a live handle; `rows` and `cols` must be writable.
 */
enum IcombStatus icomb_matrix_shape(const struct IcombMatrix *m, size_t *rows, size_t *cols);

/**
 * Determinant as `"p/q"`.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum IcombStatus icomb_matrix_det(const struct IcombMatrix *m, char **out);

/**
 * Lambda-determinant at rational `lambda` (given as `"p/q"`), as `"p/q"`.
 *
 * # Safety
 * `m` must be a live handle; `lambda` a valid string; `out` writable.
 */
enum IcombStatus icomb_matrix_lambda_det(const struct IcombMatrix *m,
                                         const char *lambda,
                                         char **out);

/**
 * Parses a quiver from JSON: `{"matrix": [[...]]}` or `{"n": N, "arrows": [[i, j], ...]}` (1-based).
 *
 * # Safety
 * `json` must be a valid string; `out` must be writable.
 */
enum IcombStatus icomb_quiver_from_json(const char *json,
                                        struct IcombQuiver **out);

/**
 * # Safety
 * `q` must be null or a live handle from [`icomb_quiver_from_json`].
 */
void icomb_quiver_free(struct IcombQuiver *q);

/**
 * Mutates in place at the 1-based vertex `k`.
 *
 * # Safety
 * `q` must be a live handle.
 */
enum IcombStatus icomb_quiver_mutate(struct IcombQuiver *q, size_t k);

/**
 * The exchange matrix as `{"matrix": [[...]]}`.
 *
 * # Safety
 * `q` must be a live handle; `out` must be writable.
 */
enum IcombStatus icomb_quiver_to_json(const struct IcombQuiver *q, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ICOMB_H */

#ifndef LUCAS_H
#define LUCAS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define LUCAS_ALGO_MIDDLE 0

#define LUCAS_ALGO_RIPPLE 1

#define LUCAS_ALGO_RIPPLE_MEMO 2

#define LUCAS_ALGO_LINEAR 3

#define LUCAS_ALGO_VIA_FIB 4

#define LUCAS_KIND_LUCAS 0

#define LUCAS_KIND_FIB 1

typedef enum LucasStatus {
  LUCAS_STATUS_OK = 0,
  LUCAS_STATUS_NULL_POINTER = 1,
  // Unknown selector, index below an operation's minimum, bad radix or
  // unparsable numeral.
  LUCAS_STATUS_INVALID_ARGUMENT = 2,
  // The value given as `L(n)` is not a Lucas number.
  LUCAS_STATUS_NOT_LUCAS = 3,
  // Output buffer too short; the required length has been reported.
  LUCAS_STATUS_BUFFER_TOO_SMALL = 4,
  LUCAS_STATUS_INDEX_OVERFLOW = 5,
  LUCAS_STATUS_INTERNAL = 6,
} LucasStatus;

// Opaque arbitrary-precision non-negative integer.
typedef struct LucasNumber LucasNumber;

// Operation tallies, mirroring `lucas_core::OpCounts`.
typedef struct LucasOpCounts {
  uint64_t squarings;
  uint64_t general_mults;
  uint64_t add_subs;
  uint64_t recursive_calls;
  uint64_t memo_hits;
} LucasOpCounts;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Computes one sequence value.
//
// `kind_id` is a `LUCAS_KIND_*` constant and `algo_id` a `LUCAS_ALGO_*`
// constant.
// On success `*out` receives a new handle. `counts` may be null.
//
// # Safety
//
// `out` must be valid for writes. `counts`, when non-null, must be valid
// for writes.
enum LucasStatus lucas_compute(uint32_t kind_id,
                               uint64_t n,
                               uint32_t algo_id,
                               struct LucasNumber **out,
                               struct LucasOpCounts *counts);

// `F(n)` from `L(n)` by exact integer square root.
//
// # Safety
//
// `lucas_value` must be a live handle; `out` must be valid for writes.
enum LucasStatus lucas_fib_from_lucas(uint64_t n,
                                      const struct LucasNumber *lucas_value,
                                      struct LucasNumber **out);

// Parses a NUL-terminated numeral in `radix` (2..=36).
//
// # Safety
//
// `text` must point to a NUL-terminated string; `out` must be valid for
// writes.
enum LucasStatus lucas_number_parse(const char *text, uint32_t radix, struct LucasNumber **out);

// Writes the numeral in `radix` (2..=36, lowercase) followed by a NUL.
//
// `*written` receives the numeral length excluding the NUL. When `buf_len`
// is too small nothing is written to `buf`, `*written` holds the length
// needed (excluding the NUL) and `LUCAS_STATUS_BUFFER_TOO_SMALL` is
// returned; `buf` may be null in that case to query the size.
//
// # Safety
//
// `num` must be a live handle, `written` valid for writes, and `buf` valid
// for `buf_len` bytes when non-null.
enum LucasStatus lucas_number_to_string(const struct LucasNumber *num,
                                        uint32_t radix,
                                        char *buf,
                                        size_t buf_len,
                                        size_t *written);

// Number of significant bits; 0 for zero.
//
// # Safety
//
// `num` must be a live handle; `out` must be valid for writes.
enum LucasStatus lucas_number_bit_length(const struct LucasNumber *num, uint64_t *out);

// Returns 1 when both handles hold the same value, 0 otherwise (including
// when either is null).
//
// # Safety
//
// Non-null arguments must be live handles.
int32_t lucas_number_equal(const struct LucasNumber *a, const struct LucasNumber *b);

// Releases a handle. Null is ignored.
//
// # Safety
//
// `num` must be null or a handle returned by this library that has not been
// freed.
void lucas_number_free(struct LucasNumber *num);

// Calls made by the unmemoized Ripple recursion for `n >= 2`.
//
// # Safety
//
// `out` must be valid for writes.
enum LucasStatus lucas_ripple_call_count(uint64_t n, uint64_t *out);

// Static, NUL-terminated description of a status code.
const char *lucas_status_message(enum LucasStatus status);

// Library version, static and NUL-terminated.
const char *lucas_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LUCAS_H */

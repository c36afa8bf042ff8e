/* C interface to the zeckstep library. All functions are thread-safe. */

#ifndef ZECKSTEP_H
#define ZECKSTEP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit by hand. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum ZeckCheck {
  /**
   * Plain counts, compared with the reference table when `n` is one of its rows.
   */
  ZECK_CHECK_TABLE1 = 0,
  ZECK_CHECK_PARTITION = 1,
  ZECK_CHECK_EXTREMA = 2,
  ZECK_CHECK_BOUND = 3,
  /**
   * `Z(k)` for `k = 2..=15`.
   */
  ZECK_CHECK_ZK = 4,
  /**
   * `Z(k, k+2)` for `k = 2..=12`.
   */
  ZECK_CHECK_ZPAIR = 5,
} ZeckCheck;

typedef enum ZeckExtremum {
  ZECK_EXTREMUM_NEITHER = 0,
  ZECK_EXTREMUM_PEAK = 1,
  ZECK_EXTREMUM_DIVOT = 2,
} ZeckExtremum;

typedef enum ZeckSetKind {
  ZECK_SET_KIND_S1 = 0,
  ZECK_SET_KIND_S2 = 1,
  ZECK_SET_KIND_S3 = 2,
  /**
   * Needs `k >= 2`.
   */
  ZECK_SET_KIND_Z = 3,
  /**
   * `Z(k, k+2)`; needs `k >= 2`.
   */
  ZECK_SET_KIND_ZPAIR = 4,
} ZeckSetKind;

/**
 * Result code of every fallible call.
 */
typedef enum ZeckStatus {
  ZECK_STATUS_OK = 0,
  ZECK_STATUS_NULL_POINTER = 1,
  /**
   * Input or result outside the supported integer range.
   */
  ZECK_STATUS_RANGE = 2,
  /**
   * Argument outside the operation's domain (e.g. `n = 0` where `n >= 1` is required).
   */
  ZECK_STATUS_DOMAIN = 3,
  /**
   * Output buffer too small; the required length was written to `out_len`.
   */
  ZECK_STATUS_BUFFER_TOO_SMALL = 4,
  /**
   * Indices do not form a Zeckendorf representation.
   */
  ZECK_STATUS_INVALID_REP = 5,
  ZECK_STATUS_PANIC = 6,
} ZeckStatus;

typedef enum ZeckStepClass {
  ZECK_STEP_CLASS_UP = 1,
  ZECK_STEP_CLASS_DOWN = -1,
  ZECK_STEP_CLASS_FLAT = 0,
} ZeckStepClass;

/**
 * Opaque sweep report.
 */
typedef struct ZeckReport ZeckReport;

/**
 * Opaque Fibonacci table.
 */
typedef struct ZeckTable ZeckTable;

typedef struct ZeckCounts {
  uint64_t up;
  uint64_t down;
  uint64_t flat;
} ZeckCounts;

typedef struct ZeckDensity {
  double gap_up;
  double gap_down;
  double gap_flat;
  /**
   * Bound on the error of the limiting constants themselves.
   */
  double constant_error;
} ZeckDensity;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *zeck_status_message(enum ZeckStatus status);

/**
 * Table covering every `u64`. Never returns NULL.
 */
struct ZeckTable *zeck_table_new(void);

/**
 * Table holding `F_0 ..= F_max_index` (`2 <= max_index <= 93`).
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum ZeckStatus zeck_table_with_max_index(uint32_t max_index, struct ZeckTable **out_table);

/**
 * # Safety
 * `table` must come from this library and not be used afterwards. NULL is ignored.
 */
void zeck_table_free(struct ZeckTable *table);

/**
 * # Safety
 * Pointers must be valid.
 */
enum ZeckStatus zeck_table_max_index(const struct ZeckTable *t, uint32_t *out_index);

/**
 * Writes the increasing Fibonacci indices of `n` into `out_indices`.
 *
 * `*out_len` always receives the number of indices; if it exceeds `capacity`
 * nothing is copied and `ZECK_STATUS_BUFFER_TOO_SMALL` is returned. 48 slots
 * always suffice.
 *
 * # Safety
 * `out_indices` must be valid for `capacity` writes; other pointers must be valid.
 */
enum ZeckStatus zeck_decompose(const struct ZeckTable *t,
                               uint64_t n,
                               uint32_t *out_indices,
                               uintptr_t capacity,
                               uintptr_t *out_len);

/**
 * # Safety
 * `indices` must be valid for `len` reads.
 */
enum ZeckStatus zeck_recompose(const struct ZeckTable *t,
                               const uint32_t *indices,
                               uintptr_t len,
                               uint64_t *out_value);

/**
 * Representation of one more than the given one, computed on the indices.
 *
 * # Safety
 * As for [`zeck_recompose`] and [`zeck_decompose`].
 */
enum ZeckStatus zeck_successor(const uint32_t *indices,
                               uintptr_t len,
                               uint32_t *out_indices,
                               uintptr_t capacity,
                               uintptr_t *out_len);

/**
 * `L(n)`; `L(0) = 0`.
 *
 * # Safety
 * `out_count` must be valid.
 */
enum ZeckStatus zeck_summand_count(uint64_t n, uint32_t *out_count);

/**
 * `f(n) = L(n+1) - L(n)`, `n >= 1`.
 *
 * # Safety
 * `out_step` must be valid.
 */
enum ZeckStatus zeck_step(uint64_t n, int32_t *out_step);

/**
 * # Safety
 * `out_class` must be valid.
 */
enum ZeckStatus zeck_classify_step(uint64_t n, enum ZeckStepClass *out_class);

/**
 * Shape of `L` at `m >= 2`.
 *
 * # Safety
 * `out_class` must be valid.
 */
enum ZeckStatus zeck_classify_extremum(uint64_t m, enum ZeckExtremum *out_class);

/**
 * `n = F_{2k+1} - 1` and `drop = 1 - k`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum ZeckStatus zeck_deep_witness(const struct ZeckTable *t,
                                  uint32_t k,
                                  uint64_t *out_n,
                                  int32_t *out_drop);

/**
 * `⌊mφ⌋`.
 *
 * # Safety
 * `out_value` must be valid.
 */
enum ZeckStatus zeck_floor_n_phi(uint64_t m, uint64_t *out_value);

/**
 * `⌊m/φ⌋`.
 *
 * # Safety
 * `out_value` must be valid.
 */
enum ZeckStatus zeck_floor_div_phi(uint64_t m, uint64_t *out_value);

/**
 * Membership of `n` in a closed-form set; `k` is ignored for S1/S2/S3.
 *
 * # Safety
 * `out_member` must be valid.
 */
enum ZeckStatus zeck_set_contains(enum ZeckSetKind kind, uint32_t k, uint64_t n, bool *out_member);

/**
 * Elements `<= limit` of a closed-form set, increasing. Same buffer protocol as
 * [`zeck_decompose`].
 *
 * # Safety
 * `out_elements` must be valid for `capacity` writes.
 */
enum ZeckStatus zeck_set_elements(enum ZeckSetKind kind,
                                  uint32_t k,
                                  uint64_t limit,
                                  uint64_t *out_elements,
                                  uintptr_t capacity,
                                  uintptr_t *out_len);

/**
 * Runs a sweep over `[1, n]` and hands back a report handle.
 *
 * # Safety
 * `out_report` must be valid for writes.
 */
enum ZeckStatus zeck_verify(enum ZeckCheck check, uint64_t n, struct ZeckReport **out_report);

/**
 * # Safety
 * Pointers must be valid.
 */
enum ZeckStatus zeck_report_counts(const struct ZeckReport *r, struct ZeckCounts *out_counts);

/**
 * Total number of mismatches found (not capped).
 *
 * # Safety
 * Pointers must be valid.
 */
enum ZeckStatus zeck_report_mismatch_total(const struct ZeckReport *r, uint64_t *out_total);

/**
 * `n` of the `index`-th recorded mismatch (at most 100 are kept).
 *
 * # Safety
 * Pointers must be valid.
 */
enum ZeckStatus zeck_report_mismatch_at(const struct ZeckReport *r,
                                        uintptr_t index,
                                        uint64_t *out_n);

/**
 * # Safety
 * `r` must come from [`zeck_verify`] and not be used afterwards. NULL is ignored.
 */
void zeck_report_free(struct ZeckReport *r);

/**
 * Distance of the observed densities over `[1, n]` from their limits.
 *
 * # Safety
 * `out_density` must be valid.
 */
enum ZeckStatus zeck_density_gap(uint64_t n, struct ZeckDensity *out_density);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZECKSTEP_H */

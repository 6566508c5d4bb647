#ifndef HODGEPOSET_H
#define HODGEPOSET_H

#pragma once

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HpStatus {
  HP_STATUS_OK = 0,
  HP_STATUS_INVARIANT = 1,
  HP_STATUS_CONFIG = 2,
  HP_STATUS_UNSUPPORTED = 3,
  HP_STATUS_BUDGET = 4,
  HP_STATUS_FIXTURE_MISMATCH = 5,
  HP_STATUS_NULL_POINTER = 10,
  HP_STATUS_INVALID_UTF8 = 11,
  HP_STATUS_OUT_OF_RANGE = 12,
  HP_STATUS_PANIC = 13,
} HpStatus;

/**
 * Classes of a classical period domain with their polarized relation.
 */
typedef struct HpPeriodDomain HpPeriodDomain;

/**
 * Classes of a domain given by a root system and grading element.
 */
typedef struct HpRootDomain HpRootDomain;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or null. Owned by the
 * library; valid until the next call on the same thread.
 */
const char *hp_last_error(void);

/**
 * Releases a string returned through an out pointer. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void hp_string_free(char *s);

/**
 * Library version as a static string.
 */
const char *hp_version(void);

/**
 * Builds the period domain for Hodge numbers `h[0..len]` of the given weight.
 *
 * # Safety
 * `h` must point to `len` readable values and `out` must be writable.
 */
enum HpStatus hp_period_domain_new(uint32_t weight,
                                   const uint64_t *h,
                                   size_t len,
                                   struct HpPeriodDomain **out);

/**
 * # Safety
 * `d` must be null or a handle from `hp_period_domain_new`.
 */
void hp_period_domain_free(struct HpPeriodDomain *d);

/**
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum HpStatus hp_period_domain_class_count(const struct HpPeriodDomain *d, size_t *out);

/**
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum HpStatus hp_period_domain_class_name(const struct HpPeriodDomain *d, size_t i, char **out);

/**
 * Whether class `i` polarizes into class `j` (strict relation).
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum HpStatus hp_period_domain_polarized(const struct HpPeriodDomain *d,
                                         size_t i,
                                         size_t j,
                                         bool *out);

/**
 * Classes, diamonds and polarized edges as JSON.
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum HpStatus hp_period_domain_json(const struct HpPeriodDomain *d, char **out);

/**
 * Builds the class set for root system `root` (e.g. "G2") and a comma
 * separated grading such as "0,1".
 *
 * # Safety
 * Both strings must be NUL terminated and `out` writable.
 */
enum HpStatus hp_root_domain_new(const char *root, const char *grading, struct HpRootDomain **out);

/**
 * # Safety
 * `d` must be null or a handle from `hp_root_domain_new`.
 */
void hp_root_domain_free(struct HpRootDomain *d);

/**
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum HpStatus hp_root_domain_class_count(const struct HpRootDomain *d, size_t *out);

/**
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum HpStatus hp_root_domain_class_name(const struct HpRootDomain *d, size_t i, char **out);

/**
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum HpStatus hp_root_domain_leq(const struct HpRootDomain *d, size_t i, size_t j, bool *out);

/**
 * Strong-orthogonality test; exact when the grading is regular,
 * a sufficient condition otherwise.
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum HpStatus hp_root_domain_polarized(const struct HpRootDomain *d, size_t i, size_t j, bool *out);

/**
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum HpStatus hp_root_domain_capacity(const struct HpRootDomain *d, size_t i, size_t *out);

/**
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum HpStatus hp_root_domain_json(const struct HpRootDomain *d, char **out);

/**
 * Orbit type ("0", "I", "II" or "III") of a binary cubic given as
 * four comma separated rationals.
 *
 * # Safety
 * `cubic` must be NUL terminated and `out` writable.
 */
enum HpStatus hp_g2_classify(const char *cubic, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HODGEPOSET_H */

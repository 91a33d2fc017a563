#ifndef HOLOWEB_H
#define HOLOWEB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HwStatus {
  HW_STATUS_OK = 0,
  HW_STATUS_NULL_POINTER = 1,
  HW_STATUS_INVALID_UTF8 = 2,
  HW_STATUS_PARSE = 3,
  HW_STATUS_INVALID = 4,
  HW_STATUS_NUMERIC = 5,
  HW_STATUS_BUFFER_TOO_SMALL = 6,
  HW_STATUS_PANIC = 7,
} HwStatus;

/**
 * Monic first-integral family.
 */
typedef struct HwFirstIntegral HwFirstIntegral;

/**
 * Implicit ODE `F(x, y, p) = 0`.
 */
typedef struct HwOde HwOde;

/**
 * Polynomial over Gaussian rationals.
 */
typedef struct HwPoly HwPoly;

/**
 * Canonical web.
 */
typedef struct HwWeb HwWeb;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Owned by the
 * library.
 */
const char *hw_last_error(void);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void hw_string_free(char *s);

/**
 * Parses `text` over the comma-separated variable list `vars`.
 *
 * # Safety
 * Pointers must be valid NUL-terminated strings; `out` must be writable.
 */
enum HwStatus hw_poly_parse(const char *text, const char *vars, struct HwPoly **out);

/**
 * # Safety
 * `poly` must be a live handle; `out` must be writable.
 */
enum HwStatus hw_poly_to_string(const struct HwPoly *poly, char **out);

/**
 * # Safety
 * `poly` must come from this library or be null.
 */
void hw_poly_free(struct HwPoly *poly);

/**
 * Sylvester resultant of `f` and `g` in `var`.
 *
 * # Safety
 * Handles must be live; `var` a valid string; `out` writable.
 */
enum HwStatus hw_resultant(const struct HwPoly *f,
                           const struct HwPoly *g,
                           const char *var,
                           struct HwPoly **out);

/**
 * Discriminant of `p` in `var`.
 *
 * # Safety
 * As for [`hw_resultant`].
 */
enum HwStatus hw_discriminant(const struct HwPoly *p, const char *var, struct HwPoly **out);

/**
 * Parses a web in text form (header optional).
 *
 * # Safety
 * `text` must be a valid string; `out` writable.
 */
enum HwStatus hw_web_parse(const char *text, struct HwWeb **out);

/**
 * Text form of the web, including the header.
 *
 * # Safety
 * `web` must be live; `out` writable.
 */
enum HwStatus hw_web_to_string(const struct HwWeb *web, char **out);

/**
 * Degree `k` of the web, or 0 for a null handle.
 *
 * # Safety
 * `web` must be live or null.
 */
uint32_t hw_web_degree(const struct HwWeb *web);

/**
 * # Safety
 * `web` must come from this library or be null.
 */
void hw_web_free(struct HwWeb *web);

/**
 * Parses a first integral (`fi` text form or a bare polynomial in `z`).
 *
 * # Safety
 * `text` must be a valid string; `out` writable.
 */
enum HwStatus hw_fi_parse(const char *text, struct HwFirstIntegral **out);

/**
 * # Safety
 * `fi` must come from this library or be null.
 */
void hw_fi_free(struct HwFirstIntegral *fi);

/**
 * Eliminates the parameter of `fi`, giving its web.
 *
 * # Safety
 * `fi` must be live; `out` writable.
 */
enum HwStatus hw_web_from_first_integral(const struct HwFirstIntegral *fi, struct HwWeb **out);

/**
 * Writes whether `fi` is a first integral of `web`.
 *
 * # Safety
 * Handles must be live; `out` writable.
 */
enum HwStatus hw_verify_first_integral(const struct HwWeb *web,
                                       const struct HwFirstIntegral *fi,
                                       bool *out);

/**
 * Levi-flat polynomial of `fi`, over the coordinates and their `_bar`
 * conjugates.
 *
 * # Safety
 * `fi` must be live; `out` writable.
 */
enum HwStatus hw_leviflat(const struct HwFirstIntegral *fi, struct HwPoly **out);

/**
 * Parses `F(x, y, p)`.
 *
 * # Safety
 * `text` must be a valid string; `out` writable.
 */
enum HwStatus hw_ode_parse(const char *text, struct HwOde **out);

/**
 * Dehomogenizes a planar web to its implicit ODE.
 *
 * # Safety
 * `web` must be live; `out` writable.
 */
enum HwStatus hw_ode_from_web(const struct HwWeb *web, struct HwOde **out);

/**
 * # Safety
 * `ode` must come from this library or be null.
 */
void hw_ode_free(struct HwOde *ode);

/**
 * Roots `p` of `F(x0, y0, p)`. Writes up to `capacity` roots as interleaved
 * `(re, im)` pairs into `roots` and their multiplicities into
 * `multiplicities`; `len` receives the number of distinct roots.
 *
 * # Safety
 * `ode` must be live; `roots` must hold `2 * capacity` doubles and
 * `multiplicities` `capacity` entries; `len` writable.
 */
enum HwStatus hw_fiber_points(const struct HwOde *ode,
                              double x0_re,
                              double x0_im,
                              double y0_re,
                              double y0_im,
                              double tolerance,
                              double *roots,
                              size_t *multiplicities,
                              size_t capacity,
                              size_t *len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOLOWEB_H */

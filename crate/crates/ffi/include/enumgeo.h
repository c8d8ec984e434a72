#ifndef ENUMGEO_H
#define ENUMGEO_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EgStatus {
  EG_STATUS_OK = 0,
  EG_STATUS_NULL_POINTER = 1,
  EG_STATUS_INVALID_UTF8 = 2,
  EG_STATUS_INVALID_ARGUMENT = 3,
  EG_STATUS_SERIES_ERROR = 4,
  EG_STATUS_LATTICE_ERROR = 5,
  EG_STATUS_INVARIANT_ERROR = 6,
  EG_STATUS_PARSE_ERROR = 7,
  EG_STATUS_PANIC = 8,
} EgStatus;

// Integral lattice with an optional canonical class.
typedef struct EgLattice EgLattice;

// Truncated q-series with exact rational coefficients.
typedef struct EgSeries EgSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. The caller owns
// the returned string.
char *eg_last_error_message(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void eg_string_free(char *s);

// `Π(1 − qⁿ)^e` with shift `e/24`, to `order`.
//
// # Safety
// `out` must be valid for writes.
enum EgStatus eg_series_eta_quotient(int64_t exponent, size_t order, struct EgSeries **out);

// Eisenstein series of weight 2, 4 or 6.
//
// # Safety
// `out` must be valid for writes.
enum EgStatus eg_series_eisenstein(int64_t weight, size_t order, struct EgSeries **out);

// Parses the JSON form produced by [`eg_series_to_json`].
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be valid for writes.
enum EgStatus eg_series_from_json(const char *json, struct EgSeries **out);

// # Safety
// `a`, `b` must be live handles; `out` must be valid for writes.
enum EgStatus eg_series_add(const struct EgSeries *a,
                            const struct EgSeries *b,
                            struct EgSeries **out);

// # Safety
// `a`, `b` must be live handles; `out` must be valid for writes.
enum EgStatus eg_series_mul(const struct EgSeries *a,
                            const struct EgSeries *b,
                            struct EgSeries **out);

// Integer power; negative exponents need an invertible constant term.
//
// # Safety
// `a` must be a live handle; `out` must be valid for writes.
enum EgStatus eg_series_pow(const struct EgSeries *a, int64_t exponent, struct EgSeries **out);

// # Safety
// `a` must be a live handle; `out` must be valid for writes.
enum EgStatus eg_series_invert(const struct EgSeries *a, struct EgSeries **out);

// # Safety
// `s` must be a live handle; `out` must be valid for writes.
enum EgStatus eg_series_order(const struct EgSeries *s, size_t *out);

// Coefficient of `q^k` as `"n"` or `"n/d"`. The caller owns the string.
//
// # Safety
// `s` must be a live handle; `out` must be valid for writes.
enum EgStatus eg_series_coefficient(const struct EgSeries *s, int64_t k, char **out);

// Shift of the series as `"n"` or `"n/d"`. The caller owns the string.
//
// # Safety
// `s` must be a live handle; `out` must be valid for writes.
enum EgStatus eg_series_shift(const struct EgSeries *s, char **out);

// # Safety
// `s` must be a live handle; `out` must be valid for writes.
enum EgStatus eg_series_to_json(const struct EgSeries *s, char **out);

// # Safety
// `s` must be NULL or a handle from this library that has not been freed.
void eg_series_free(struct EgSeries *s);

// The half-K3 lattice `Γ^{1,9}` with aliases `F`, `B`, `K`.
//
// # Safety
// `out` must be valid for writes.
enum EgStatus eg_lattice_gamma19(struct EgLattice **out);

// ℙ² blown up at `k` points.
//
// # Safety
// `out` must be valid for writes.
enum EgStatus eg_lattice_blowup_p2(size_t k, struct EgLattice **out);

// The positive-definite E8 lattice.
//
// # Safety
// `out` must be valid for writes.
enum EgStatus eg_lattice_e8(struct EgLattice **out);

// # Safety
// `l` must be a live handle; `out` must be valid for writes.
enum EgStatus eg_lattice_rank(const struct EgLattice *l, size_t *out);

// `u·v` for coordinate arrays of length `rank`.
//
// # Safety
// `l` must be a live handle, `u` and `v` must point to `rank` integers,
// and `out` must be valid for writes.
enum EgStatus eg_lattice_pair(const struct EgLattice *l,
                              const int64_t *u,
                              const int64_t *v,
                              int64_t *out);

// `u·v` for vectors written as label expressions such as `"3e0-e1"` or `"B+2F"`.
//
// # Safety
// `l` must be a live handle, `u` and `v` NUL-terminated strings, and `out`
// valid for writes.
enum EgStatus eg_lattice_pair_str(const struct EgLattice *l,
                                  const char *u,
                                  const char *v,
                                  int64_t *out);

// Adjunction genus of a class given as a label expression.
//
// # Safety
// `l` must be a live handle, `beta` a NUL-terminated string, and `out`
// valid for writes.
enum EgStatus eg_lattice_genus(const struct EgLattice *l, const char *beta, int64_t *out);

// # Safety
// `l` must be a live handle; `positive` and `negative` must be valid for writes.
enum EgStatus eg_lattice_signature(const struct EgLattice *l, size_t *positive, size_t *negative);

// Number of vectors of norm exactly `norm` in a positive-definite lattice.
//
// # Safety
// `l` must be a live handle; `out` must be valid for writes.
enum EgStatus eg_lattice_count_norm(const struct EgLattice *l, int64_t norm, uint64_t *out);

// # Safety
// `l` must be NULL or a handle from this library that has not been freed.
void eg_lattice_free(struct EgLattice *l);

// Number of (−1)-classes on ℙ² blown up at `k` points with `e0`-degree at
// most `degree_bound`.
//
// # Safety
// `out` must be valid for writes.
enum EgStatus eg_exceptional_count(size_t k, int64_t degree_bound, size_t *out);

// SW invariant of ℙ² for `c = c_coeff·h`; `chamber` is `+1` or `−1`.
//
// # Safety
// `out` must be valid for writes.
enum EgStatus eg_sw_p2(int64_t c_coeff, int32_t chamber, int64_t *out);

// `(−1)^d·C(p_g − 1, d)` as a decimal string. The caller owns the string.
//
// # Safety
// `out` must be valid for writes.
enum EgStatus eg_sw_closed_form(int64_t d, int64_t p_g, char **out);

// Evaluates the wall-crossing sum for a JSON decomposition document and
// returns `{"value": [num, den], "warnings": [...]}`. The caller owns the string.
//
// # Safety
// `input` must be a NUL-terminated string; `out` must be valid for writes.
enum EgStatus eg_mochizuki_sum_json(const char *input, char **out);

// Runs the full verification suite. `failed` receives the number of failed
// checks and `report` (if not NULL) the JSON report, owned by the caller.
//
// # Safety
// `failed` must be valid for writes; `report` must be NULL or valid for writes.
enum EgStatus eg_verify_all(size_t order, size_t *failed, char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ENUMGEO_H */

#ifndef GAUNT_H
#define GAUNT_H

/* Generated by cbindgen from gaunt-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Success.
 */
#define GAUNT_OK 0

/**
 * A validation check failed; details via `gaunt_last_error`.
 */
#define GAUNT_CHECK_FAILED 1

/**
 * Malformed or out-of-range input (including NULL pointers).
 */
#define GAUNT_INVALID_INPUT 2

/**
 * Enumeration was not saturated at the given cap; raise it and retry.
 */
#define GAUNT_UNSATURATED 3

/**
 * An augmented directed complex. Opaque; create with `gaunt_complex_build`
 * or `gaunt_complex_from_json`, destroy with `gaunt_complex_free`.
 */
typedef struct GauntComplex GauntComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message recorded by the most recent failing call on this thread, or
 * NULL if none. The pointer is borrowed: do not free it, and do not use it
 * after the next failing call on the same thread.
 */
const char *gaunt_last_error(void);

/**
 * Builds a standard shape from a spec string: `point`, `oriental:n`,
 * `cube:n`, `disk:n`, or `boundary:n`. Returns NULL on a malformed spec.
 */
struct GauntComplex *gaunt_complex_build(const char *spec);

/**
 * Parses a complex from its JSON wire format. Returns NULL on parse errors.
 */
struct GauntComplex *gaunt_complex_from_json(const char *text);

/**
 * Serializes a complex to its JSON wire format. Free with
 * `gaunt_string_free`.
 */
char *gaunt_complex_to_json(const struct GauntComplex *handle);

/**
 * Validates the complex: differential squared, unital atoms, and
 * loop-freeness. Returns 0 on pass, 1 on failure (details via
 * `gaunt_last_error`), 2 on a NULL handle.
 */
int gaunt_complex_validate(const struct GauntComplex *handle);

/**
 * Number of generators of the given degree.
 */
uintptr_t gaunt_complex_generators(const struct GauntComplex *handle, uintptr_t degree);

/**
 * π₀ as a JSON poset (`labels` plus covering `edges`), or NULL on failure.
 * `cap` bounds the coefficients explored by chain enumeration.
 */
char *gaunt_pi0_json(const struct GauntComplex *handle, uint32_t cap);

/**
 * π₁ at the object pair `(a, b)` as a JSON poset, or NULL on failure.
 * `a` and `b` index degree-0 generators.
 */
char *gaunt_pi1_json(const struct GauntComplex *handle, uintptr_t a, uintptr_t b, uint32_t cap);

/**
 * Status-code variant of the π computations, for callers that only need the
 * saturation verdict: 0 if the enumeration saturates at `cap`, 3 if not.
 */
int gaunt_pi0_status(const struct GauntComplex *handle, uint32_t cap);

/**
 * Releases a complex handle. NULL is a no-op.
 */
void gaunt_complex_free(struct GauntComplex *handle);

/**
 * Releases a string returned by this library. NULL is a no-op.
 */
void gaunt_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* GAUNT_H */

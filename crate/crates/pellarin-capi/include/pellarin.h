/* C interface for the pellarin exact-arithmetic library. */

#ifndef PELLARIN_H
#define PELLARIN_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code for every C API call.
typedef enum PellarinStatus {
  PELLARIN_STATUS_OK = 0,
  // A required pointer argument was null.
  PELLARIN_STATUS_NULL_POINTER = 1,
  // The characteristic is not prime.
  PELLARIN_STATUS_NOT_PRIME = 2,
  // The modulus is invalid for the requested extension.
  PELLARIN_STATUS_BAD_MODULUS = 3,
  // A parameter is outside the supported range.
  PELLARIN_STATUS_OUT_OF_RANGE = 4,
  // An exactness or structure invariant failed for these inputs.
  PELLARIN_STATUS_DOMAIN_ERROR = 5,
  // An internal panic was caught at the boundary.
  PELLARIN_STATUS_INTERNAL_PANIC = 6,
} PellarinStatus;

// Opaque handle to a coefficient field F_{p^e}.
typedef struct PellarinField PellarinField;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Create a field F_{p^e}. `modulus` may be null (use the default modulus);
// otherwise it is a low-to-high array of `modulus_len` coefficients in
// [0, p) describing a monic irreducible of degree e over F_p.
enum PellarinStatus pellarin_field_new(uint64_t p,
                                       size_t e,
                                       const uint64_t *modulus,
                                       size_t modulus_len,
                                       struct PellarinField **out);

// Release a field handle. Null is a no-op.
void pellarin_field_free(struct PellarinField *field);

// Release a string returned by any `_json` function. Null is a no-op.
void pellarin_string_free(char *s);

// Untwisted power sum S_d(k) as a JSON array of F_q coefficients
// (ascending theta powers, each coefficient an array of base-p digits).
enum PellarinStatus pellarin_power_sum_json(const struct PellarinField *field,
                                            size_t d,
                                            uint64_t k,
                                            char **out);

// Twisted power sum S_d(chi_t^beta, k) as a JSON array of t-coefficients.
enum PellarinStatus pellarin_twisted_power_sum_json(const struct PellarinField *field,
                                                    size_t d,
                                                    uint64_t beta,
                                                    uint64_t k,
                                                    char **out);

// Special polynomial z(chi_t^beta, x, -k) as a JSON object with beta, k,
// degree (-1 for the zero polynomial), coefficients in u = x^{-1}, and the
// method used. `use_recursion` of 0 forces the brute-force sum.
enum PellarinStatus pellarin_special_poly_json(const struct PellarinField *field,
                                               uint64_t beta,
                                               uint64_t k,
                                               uint8_t use_recursion,
                                               char **out);

// L-value L(chi_t^beta, -k) as a JSON array of t-coefficients (empty for 0).
enum PellarinStatus pellarin_l_value_json(const struct PellarinField *field,
                                          uint64_t beta,
                                          uint64_t k,
                                          char **out);

// Order of vanishing of the L-value at x = 1: 0 or 1. Requires k >= 1.
enum PellarinStatus pellarin_trivial_zero_order(const struct PellarinField *field,
                                                uint64_t beta,
                                                uint64_t k,
                                                uint32_t *out);

// The exact degree phi(beta, k) in x^{-1}. Requires beta, k >= 1.
enum PellarinStatus pellarin_phi_degree(const struct PellarinField *field,
                                        uint64_t beta,
                                        uint64_t k,
                                        uint64_t *out);

// Sheats' criterion: writes 1 when S_d(k) is nonzero, 0 otherwise.
enum PellarinStatus pellarin_sheats_test(const struct PellarinField *field,
                                         size_t d,
                                         uint64_t k,
                                         uint8_t *out);

// Wagner coefficient b_d(chi_t) as a JSON object {d, b, m0}, where b is
// verified against the closed product over (t - theta^{q^l}) before being
// returned.
enum PellarinStatus pellarin_wagner_coeff_json(const struct PellarinField *field,
                                               size_t d,
                                               char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* PELLARIN_H */

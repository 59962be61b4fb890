#pragma once

#include <cstdint>
#include <vector>

#include "dickson/field.hpp"
#include "dickson/polynomial.hpp"

namespace dickson {

/// Throws CharacteristicTwoError when the field has characteristic 2.
void require_odd_characteristic(const Field& field);

/// Coefficient form of the n-th reversed Dickson polynomial of the
/// (kind+1)-th kind in one variable with unit parameter, as a polynomial
/// with prime-subfield coefficients. kind must be 0, 1 or 2 (third kind).
///
/// Coefficients are built from exact integer binomials: the x^i coefficient
/// is (-1)^i * (C(n-i, i) - (kind-1) * C(n-i-1, i-1)), reduced mod p only at
/// the end. This sidesteps the division in the classical (n-ki)/(n-i) form,
/// which is undefined mod p whenever p divides n-i. For n = 0 the result is
/// the constant 2 - kind.
DensePoly coeff_poly(const Field& field, uint64_t n, uint32_t kind);

/// F_n(1, x) by the linear recurrence F_0 = 0, F_1 = 1,
/// F_n = F_{n-1} - x * F_{n-2}. O(n) field operations.
FieldElem eval_recurrence(const Field& field, uint64_t n, const FieldElem& x);

/// The whole orbit F_0(1,x) .. F_{n_max}(1,x) in one sweep of the recurrence.
std::vector<FieldElem> recurrence_series(const Field& field, uint64_t n_max,
                                         const FieldElem& x);

/// F_n(a, x) through the coefficient form: a^n * F_n(1, x / a^2) for a != 0,
/// and identically 0 for a = 0 (the third-kind family vanishes there).
FieldElem eval_coefficient(const Field& field, uint64_t n, const FieldElem& a,
                           const FieldElem& x);

/// F_n(1, 1/4) = n / 2^(n-1), the value at the branch point of the
/// y-parameterization; 0 for n = 0.
FieldElem quarter_point_value(const Field& field, uint64_t n);

/// F_n(1, x) through the functional equation: writes x = y(1-y) with
/// y = (1 + sqrt(1-4x))/2 taken in GF(q) when 1-4x is a square there and in
/// GF(q^2) otherwise, then evaluates (y^n - (1-y)^n)/(2y - 1). The quarter
/// point x = 1/4 uses n / 2^(n-1). Values computed in the extension always
/// land back in the embedded base field; anything else signals an
/// arithmetic bug and throws std::logic_error.
FieldElem eval_functional(const QuadExt& ext, uint64_t n, const FieldElem& x);

/// Convenience overload constructing the quadratic extension per call.
FieldElem eval_functional(const Field& field, uint64_t n, const FieldElem& x);

/// The polynomial of odd-index binomial coefficients,
/// sum_j C(n, 2j+1) x^j, with prime-subfield coefficients. It satisfies
/// F_n(1, x) = (1/2)^(n-1) * f(1 - 4x) where f is this polynomial.
DensePoly odd_binomial_poly(const Field& field, uint64_t n);

/// odd_binomial_poly evaluated at a point.
FieldElem odd_binomial_eval(const Field& field, uint64_t n, const FieldElem& x);

/// The lift F_n(1,x)^(p^k) * (1-4x)^((p^k-1)/2), which equals
/// F_{n*p^k}(1, x); kept as an independent route for cross-checking the
/// direct recurrence at index n*p^k. Requires k >= 1 and n*p^k to fit in
/// 64 bits.
FieldElem frobenius_lift(const Field& field, uint64_t n, uint32_t k,
                         const FieldElem& x);

/// Jacobsthal polynomial J_n at a point: J_0 = 0, J_1 = 1,
/// J_n = J_{n-1} + 2x * J_{n-2}.
FieldElem jacobsthal(const Field& field, uint64_t n, const FieldElem& x);

/// F_n(1, x) through the Jacobsthal connection F_n(1, x) = J_n(-x/2).
FieldElem jacobsthal_substitution(const Field& field, uint64_t n,
                                  const FieldElem& x);

}  // namespace dickson

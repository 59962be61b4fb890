#pragma once

#include <cstdint>
#include <vector>

#include "dickson/field.hpp"
#include "dickson/polynomial.hpp"

namespace dickson {

/// The coefficient machinery behind the closed evaluation of
/// sum_{a in F_q} F_n(1, a). Every array lives over the prime field GF(p)
/// (all the generating-function coefficients are prime-field values) and is
/// 1-based: index 0 is stored but unused.
///
/// kernel  : coefficients of z * (-1 - (z - z^q)^(q-1)), indices 1..q^2-q+1.
/// rhs     : coefficients of the expanded right-hand side that drives the
///           recursion, indices 1..q^2+q-1.
/// reduced : the sums with the quarter-point series removed,
///           indices 1..q^2-1.
/// sums    : sum_{a in F_q} F_n(1, a) = reduced[n] + n/2^(n-1),
///           indices 1..q^2-1.
struct SumTable {
    Field field;        // the field being summed over, order q
    Field prime_field;  // GF(p), where all coefficients live
    uint64_t q = 0;
    std::vector<FieldElem> kernel;
    std::vector<FieldElem> rhs;
    std::vector<FieldElem> reduced;
    std::vector<FieldElem> sums;

    static SumTable build(const Field& field);
};

/// sum_{a in F_q} F_n(1, a) by direct summation over the recurrence
/// evaluator. The result always lies in the prime subfield; this is
/// asserted and a violation throws std::logic_error.
FieldElem sum_bruteforce(const Field& field, uint64_t n);

/// Kernel coefficients computed twice, by polynomial expansion and by the
/// closed form over k = alpha + beta*q (binomial (q-1 choose beta) with sign
/// when alpha+beta = q, -1 when alpha+beta = 1, else 0); the two routes are
/// compared index by index and a mismatch throws std::logic_error.
std::vector<FieldElem> kernel_coeffs(const Field& field);

/// Expands the recursion right-hand side with exact polynomial arithmetic
/// over GF(p) and returns its coefficients 1..q^2+q-1. The constant term
/// must vanish and the degree must stay within q^2+q-1; violations throw.
std::vector<FieldElem> rhs_coeffs(const Field& field,
                                  const std::vector<FieldElem>& kernel);

/// Fills reduced[1..q^2-1] from the rhs coefficients by the coefficient
/// recursion, then recomputes the final q entries both by the tail closed
/// form (suffix sums of rhs) and by continuing the recursion, throwing
/// std::logic_error with the offending index when the two disagree.
std::vector<FieldElem> reduced_sum_table(const Field& field,
                                         const std::vector<FieldElem>& rhs);

/// sum_{a in F_q} F_n(1, a) through the coefficient recursion; the table is
/// built on first use per field and cached. n must lie in 1..q^2-1.
FieldElem sum_via_recursion(const Field& field, uint64_t n);

/// Denominator-free form of the identity between the two closed forms of
/// the series kernel:
///   z(-1-(z-z^q)^(q-1)) * (z-1) * ((z-1)^(q-1) - z^(2(q-1)))
///     == z(z^(q^2-1)-1) * (z^q - z^(q-1) - 1)
/// in GF(p)[z]. Returns true when the polynomials agree.
bool kernel_identity_holds(const Field& field);

}  // namespace dickson

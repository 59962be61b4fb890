#pragma once

#include <cstdint>
#include <vector>

#include "dickson/field.hpp"

namespace dickson {

/// Univariate polynomial over a field, dense coefficients low degree first.
/// Normalized: no trailing zero coefficients, so the zero polynomial has an
/// empty coefficient vector and degree() == -1.
class DensePoly {
  public:
    static DensePoly zero(const Field& field);
    static DensePoly one(const Field& field);
    static DensePoly constant(const Field& field, const FieldElem& c);
    static DensePoly monomial(const Field& field, const FieldElem& c,
                              size_t exponent);
    static DensePoly from_coeffs(const Field& field,
                                 std::vector<FieldElem> coeffs);

    const Field& field() const { return field_; }
    const std::vector<FieldElem>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    int64_t degree() const { return static_cast<int64_t>(coeffs_.size()) - 1; }

    /// Coefficient of x^i; zero beyond the stored degree.
    FieldElem coeff(size_t i) const;

    DensePoly add(const DensePoly& other) const;
    DensePoly sub(const DensePoly& other) const;
    DensePoly neg() const;
    DensePoly mul(const DensePoly& other) const;
    DensePoly scalar_mul(const FieldElem& c) const;
    DensePoly pow(uint64_t n) const;

    FieldElem eval(const FieldElem& x) const;

    /// Reduction modulo x^q - x as a function on GF(q): every exponent
    /// i >= q is folded by i -> i - (q-1) until it lies below q, exponent 0
    /// is kept fixed. The result has degree < q and the same values on the
    /// field of order q.
    DensePoly mod_xq_minus_x(uint64_t q) const;

    friend bool operator==(const DensePoly& a, const DensePoly& b)
    {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

    friend DensePoly operator+(const DensePoly& a, const DensePoly& b)
    {
        return a.add(b);
    }
    friend DensePoly operator-(const DensePoly& a, const DensePoly& b)
    {
        return a.sub(b);
    }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b)
    {
        return a.mul(b);
    }

  private:
    DensePoly(Field field, std::vector<FieldElem> coeffs);

    void normalize();
    void require_same_field(const DensePoly& other) const;

    Field field_;
    std::vector<FieldElem> coeffs_;
};

}  // namespace dickson

#include "dickson/polynomial.hpp"

namespace dickson {

DensePoly::DensePoly(Field field, std::vector<FieldElem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs))
{
    normalize();
}

void DensePoly::normalize()
{
    while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) {
        coeffs_.pop_back();
    }
}

void DensePoly::require_same_field(const DensePoly& other) const
{
    if (!(field_ == other.field_)) {
        throw std::invalid_argument("polynomial operands over different fields");
    }
}

DensePoly DensePoly::zero(const Field& field) { return {field, {}}; }

DensePoly DensePoly::one(const Field& field) { return {field, {field.one()}}; }

DensePoly DensePoly::constant(const Field& field, const FieldElem& c)
{
    return {field, {c}};
}

DensePoly DensePoly::monomial(const Field& field, const FieldElem& c,
                              size_t exponent)
{
    std::vector<FieldElem> coeffs(exponent + 1, field.zero());
    coeffs[exponent] = c;
    return {field, std::move(coeffs)};
}

DensePoly DensePoly::from_coeffs(const Field& field,
                                 std::vector<FieldElem> coeffs)
{
    return {field, std::move(coeffs)};
}

FieldElem DensePoly::coeff(size_t i) const
{
    if (i >= coeffs_.size()) return field_.zero();
    return coeffs_[i];
}

DensePoly DensePoly::add(const DensePoly& other) const
{
    require_same_field(other);
    std::vector<FieldElem> out(std::max(coeffs_.size(), other.coeffs_.size()),
                               field_.zero());
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] = field_.add(coeff(i), other.coeff(i));
    }
    return {field_, std::move(out)};
}

DensePoly DensePoly::sub(const DensePoly& other) const
{
    require_same_field(other);
    std::vector<FieldElem> out(std::max(coeffs_.size(), other.coeffs_.size()),
                               field_.zero());
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] = field_.sub(coeff(i), other.coeff(i));
    }
    return {field_, std::move(out)};
}

DensePoly DensePoly::neg() const
{
    std::vector<FieldElem> out = coeffs_;
    for (auto& c : out) c = field_.neg(c);
    return {field_, std::move(out)};
}

DensePoly DensePoly::mul(const DensePoly& other) const
{
    require_same_field(other);
    if (is_zero() || other.is_zero()) return zero(field_);
    std::vector<FieldElem> out(coeffs_.size() + other.coeffs_.size() - 1,
                               field_.zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (field_.is_zero(coeffs_[i])) continue;
        for (size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] = field_.add(
                out[i + j], field_.mul(coeffs_[i], other.coeffs_[j]));
        }
    }
    return {field_, std::move(out)};
}

DensePoly DensePoly::scalar_mul(const FieldElem& c) const
{
    std::vector<FieldElem> out = coeffs_;
    for (auto& v : out) v = field_.mul(v, c);
    return {field_, std::move(out)};
}

DensePoly DensePoly::pow(uint64_t n) const
{
    DensePoly result = one(field_);
    DensePoly base = *this;
    while (n > 0) {
        if (n & 1) result = result.mul(base);
        n >>= 1;
        if (n > 0) base = base.mul(base);
    }
    return result;
}

FieldElem DensePoly::eval(const FieldElem& x) const
{
    FieldElem acc = field_.zero();
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = field_.add(field_.mul(acc, x), coeffs_[i]);
    }
    return acc;
}

DensePoly DensePoly::mod_xq_minus_x(uint64_t q) const
{
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    std::vector<FieldElem> out(std::min<size_t>(coeffs_.size(), q),
                               field_.zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const size_t target = i < q ? i : ((i - 1) % (q - 1)) + 1;
        if (target >= out.size()) out.resize(target + 1, field_.zero());
        out[target] = field_.add(out[target], coeffs_[i]);
    }
    return {field_, std::move(out)};
}

}  // namespace dickson

#include "dickson/reversed_dickson.hpp"

#include "binomial.hpp"

namespace dickson {

using detail::BigInt;

void require_odd_characteristic(const Field& field)
{
    if (field.characteristic() == 2) throw CharacteristicTwoError();
}

DensePoly coeff_poly(const Field& field, uint64_t n, uint32_t kind)
{
    if (kind > 2) {
        throw std::invalid_argument("kind parameter must be 0, 1 or 2");
    }
    const uint32_t p = field.characteristic();
    if (n == 0) {
        return DensePoly::constant(field, field.from_int(2 - kind));
    }
    std::vector<FieldElem> coeffs;
    coeffs.reserve(n / 2 + 1);
    // first = C(n-i, i), second = C(n-i-1, i-1); both stepped by the shared
    // ratio (n-2i+2)(n-2i+1) / denominator, divisions exact by construction.
    BigInt first = 1;
    BigInt second = 0;
    for (uint64_t i = 0; i <= n / 2; ++i) {
        if (i >= 1) {
            const BigInt num = BigInt(n - 2 * i + 2) * (n - 2 * i + 1);
            first = first * num / (BigInt(i) * (n - i + 1));
            second = (i == 1) ? BigInt(1)
                              : second * num / (BigInt(i - 1) * (n - i));
        }
        BigInt c = first;
        if (kind == 2) {
            c -= second;
        } else if (kind == 0) {
            c += second;
        }
        uint32_t residue = detail::reduce_mod(c, p);
        if ((i & 1) != 0) residue = (p - residue) % p;  // the (-x)^i sign
        coeffs.push_back(field.from_int(residue));
    }
    return DensePoly::from_coeffs(field, std::move(coeffs));
}

FieldElem eval_recurrence(const Field& field, uint64_t n, const FieldElem& x)
{
    require_odd_characteristic(field);
    if (n == 0) return field.zero();
    FieldElem prev = field.zero();  // F_0
    FieldElem cur = field.one();    // F_1
    for (uint64_t i = 2; i <= n; ++i) {
        FieldElem next = field.sub(cur, field.mul(x, prev));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<FieldElem> recurrence_series(const Field& field, uint64_t n_max,
                                         const FieldElem& x)
{
    require_odd_characteristic(field);
    std::vector<FieldElem> out;
    out.reserve(n_max + 1);
    out.push_back(field.zero());
    if (n_max == 0) return out;
    out.push_back(field.one());
    for (uint64_t i = 2; i <= n_max; ++i) {
        out.push_back(field.sub(out[i - 1], field.mul(x, out[i - 2])));
    }
    return out;
}

FieldElem eval_coefficient(const Field& field, uint64_t n, const FieldElem& a,
                           const FieldElem& x)
{
    if (field.is_zero(a)) return field.zero();
    const DensePoly poly = coeff_poly(field, n, 2);
    const FieldElem arg = field.mul(x, field.inv(field.mul(a, a)));
    return field.mul(field.pow(a, n), poly.eval(arg));
}

FieldElem quarter_point_value(const Field& field, uint64_t n)
{
    require_odd_characteristic(field);
    if (n == 0) return field.zero();
    const uint32_t p = field.characteristic();
    const FieldElem inv2 = field.inv(field.from_int(2));
    return field.mul(field.from_int(n % p),
                     field.pow(inv2, (n - 1) % (p - 1)));
}

FieldElem eval_functional(const QuadExt& ext, uint64_t n, const FieldElem& x)
{
    const Field& base = ext.base();
    require_odd_characteristic(base);
    const FieldElem disc =
        base.sub(base.one(), base.mul(base.from_int(4), x));
    if (base.is_zero(disc)) return quarter_point_value(base, n);
    if (auto s = base.sqrt(disc)) {
        // y = (1+s)/2 lies in the base field and 2y - 1 = s.
        const FieldElem y = base.mul(base.add(base.one(), *s),
                                     base.inv(base.from_int(2)));
        const FieldElem num =
            base.sub(base.pow(y, n), base.pow(base.sub(base.one(), y), n));
        return base.mul(num, base.inv(*s));
    }
    const Field& up = ext.ext();
    const auto s = up.sqrt(ext.embed(disc));
    if (!s) throw std::logic_error("non-square in the quadratic extension");
    const FieldElem y =
        up.mul(up.add(up.one(), *s), up.inv(up.from_int(2)));
    const FieldElem num =
        up.sub(up.pow(y, n), up.pow(up.sub(up.one(), y), n));
    return ext.project(up.mul(num, up.inv(*s)));
}

FieldElem eval_functional(const Field& field, uint64_t n, const FieldElem& x)
{
    return eval_functional(quad_ext(field), n, x);
}

DensePoly odd_binomial_poly(const Field& field, uint64_t n)
{
    require_odd_characteristic(field);
    const uint32_t p = field.characteristic();
    if (n == 0) return DensePoly::zero(field);
    std::vector<FieldElem> coeffs;
    coeffs.reserve((n + 1) / 2);
    BigInt c = n;  // C(n, 1)
    for (uint64_t j = 0; 2 * j + 1 <= n; ++j) {
        if (j >= 1) {
            const uint64_t m = 2 * j - 1;  // step C(n, m) -> C(n, m+2)
            c = c * (n - m) * (n - m - 1) / (BigInt(m + 1) * (m + 2));
        }
        coeffs.push_back(field.from_int(detail::reduce_mod(c, p)));
    }
    return DensePoly::from_coeffs(field, std::move(coeffs));
}

FieldElem odd_binomial_eval(const Field& field, uint64_t n, const FieldElem& x)
{
    return odd_binomial_poly(field, n).eval(x);
}

FieldElem frobenius_lift(const Field& field, uint64_t n, uint32_t k,
                         const FieldElem& x)
{
    require_odd_characteristic(field);
    if (k < 1) throw std::invalid_argument("lift power k must be >= 1");
    uint64_t pk = 1;
    for (uint32_t i = 0; i < k; ++i) {
        if (pk > UINT64_MAX / field.characteristic()) {
            throw std::invalid_argument("p^k exceeds 64 bits");
        }
        pk *= field.characteristic();
    }
    if (n != 0 && pk > UINT64_MAX / n) {
        throw std::invalid_argument("n * p^k exceeds 64 bits");
    }
    const FieldElem base_val = eval_recurrence(field, n, x);
    const FieldElem disc =
        field.sub(field.one(), field.mul(field.from_int(4), x));
    return field.mul(field.pow(base_val, pk), field.pow(disc, (pk - 1) / 2));
}

FieldElem jacobsthal(const Field& field, uint64_t n, const FieldElem& x)
{
    if (n == 0) return field.zero();
    const FieldElem two_x = field.mul(field.from_int(2), x);
    FieldElem prev = field.zero();  // J_0
    FieldElem cur = field.one();    // J_1
    for (uint64_t i = 2; i <= n; ++i) {
        FieldElem next = field.add(cur, field.mul(two_x, prev));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

FieldElem jacobsthal_substitution(const Field& field, uint64_t n,
                                  const FieldElem& x)
{
    require_odd_characteristic(field);
    const FieldElem arg =
        field.mul(field.neg(x), field.inv(field.from_int(2)));
    return jacobsthal(field, n, arg);
}

}  // namespace dickson

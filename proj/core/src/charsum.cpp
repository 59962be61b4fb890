#include "dickson/charsum.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "binomial.hpp"
#include "dickson/reversed_dickson.hpp"

namespace dickson {
namespace {

// z * (-1 - (z - z^q)^(q-1)) over GF(p), the expansion route.
DensePoly kernel_poly_expansion(const Field& fp, uint64_t q)
{
    const DensePoly z = DensePoly::monomial(fp, fp.one(), 1);
    const DensePoly zq = DensePoly::monomial(fp, fp.one(), q);
    const DensePoly inner = (z - zq).pow(q - 1);
    return z * (DensePoly::one(fp).neg() - inner);
}

}  // namespace

FieldElem sum_bruteforce(const Field& field, uint64_t n)
{
    require_odd_characteristic(field);
    FieldElem acc = field.zero();
    for (uint64_t i = 0; i < field.order(); ++i) {
        acc = field.add(acc, eval_recurrence(field, n, field.element_at(i)));
    }
    if (!field.in_prime_subfield(acc)) {
        throw std::logic_error("sum fell outside the prime subfield");
    }
    return acc;
}

std::vector<FieldElem> kernel_coeffs(const Field& field)
{
    require_odd_characteristic(field);
    const uint32_t p = field.characteristic();
    const uint64_t q = field.order();
    const Field fp = Field::make(p, 1);

    const DensePoly expansion = kernel_poly_expansion(fp, q);

    // Closed form over k = alpha + beta*q, 0 <= alpha, beta <= q-1.
    std::vector<detail::BigInt> row(q);  // C(q-1, beta)
    row[0] = 1;
    for (uint64_t b = 1; b < q; ++b) row[b] = row[b - 1] * (q - b) / b;

    const uint64_t len = q * q - q + 1;
    std::vector<FieldElem> kernel(len + 1, fp.zero());
    for (uint64_t k = 1; k <= len; ++k) {
        const uint64_t alpha = k % q;
        const uint64_t beta = k / q;
        if (alpha + beta == q) {
            uint32_t v = detail::reduce_mod(row[beta], p);
            if (beta % 2 == 0) v = (p - v) % p;  // sign (-1)^(beta+1)
            kernel[k] = fp.from_int(v);
        } else if (alpha + beta == 1) {
            kernel[k] = fp.from_int(p - 1);
        }
    }

    if (expansion.degree() != static_cast<int64_t>(len) ||
        !fp.is_zero(expansion.coeff(0))) {
        throw std::logic_error("kernel expansion has unexpected shape");
    }
    for (uint64_t k = 1; k <= len; ++k) {
        if (!(expansion.coeff(k) == kernel[k])) {
            throw std::logic_error(
                "kernel coefficient routes disagree at k=" + std::to_string(k));
        }
    }
    return kernel;
}

std::vector<FieldElem> rhs_coeffs(const Field& field,
                                  const std::vector<FieldElem>& kernel)
{
    require_odd_characteristic(field);
    const uint32_t p = field.characteristic();
    const uint64_t q = field.order();
    const Field fp = Field::make(p, 1);

    // (1 + z^(q-1) - z^q) * (z + z^2 + ... + z^(q^2-1))
    std::vector<FieldElem> geom(q * q, fp.one());
    geom[0] = fp.zero();
    const DensePoly lead =
        DensePoly::one(fp) + DensePoly::monomial(fp, fp.one(), q - 1) -
        DensePoly::monomial(fp, fp.one(), q);
    const DensePoly term1 = lead * DensePoly::from_coeffs(fp, std::move(geom));

    // z^(2(q-1)) + sum_{j=1}^{q-1} (z-1)^(q-1-j) z^(2j) (1/4)^j
    const FieldElem inv4 = fp.inv(fp.from_int(4));
    const DensePoly z_minus_1 =
        DensePoly::monomial(fp, fp.one(), 1) - DensePoly::one(fp);
    std::vector<DensePoly> zm_power{DensePoly::one(fp)};  // (z-1)^t
    for (uint64_t t = 1; t <= q - 2; ++t) {
        zm_power.push_back(zm_power.back() * z_minus_1);
    }
    DensePoly inner = DensePoly::monomial(fp, fp.one(), 2 * (q - 1));
    FieldElem quarter = fp.one();
    for (uint64_t j = 1; j <= q - 1; ++j) {
        quarter = fp.mul(quarter, inv4);
        inner = inner + DensePoly::monomial(fp, quarter, 2 * j) *
                            zm_power[q - 1 - j];
    }

    DensePoly kernel_poly = DensePoly::from_coeffs(fp, kernel);
    const DensePoly rhs = term1 - inner * kernel_poly;

    if (rhs.degree() > static_cast<int64_t>(q * q + q - 1)) {
        throw std::logic_error("rhs polynomial exceeds its degree bound");
    }
    if (!fp.is_zero(rhs.coeff(0))) {
        throw std::logic_error("rhs polynomial has a nonzero constant term");
    }
    std::vector<FieldElem> out(q * q + q, fp.zero());
    for (uint64_t k = 1; k <= q * q + q - 1; ++k) out[k] = rhs.coeff(k);
    return out;
}

std::vector<FieldElem> reduced_sum_table(const Field& field,
                                         const std::vector<FieldElem>& rhs)
{
    require_odd_characteristic(field);
    const uint64_t q = field.order();
    const Field fp = Field::make(field.characteristic(), 1);
    auto c = [&](uint64_t k) -> const FieldElem& { return rhs[k]; };

    std::vector<FieldElem> d(q * q, fp.zero());
    for (uint64_t j = 1; j <= q - 1; ++j) d[j] = fp.neg(c(j));
    d[q] = fp.sub(c(1), c(q));
    for (uint64_t l = 1; l + 2 <= q; ++l) {  // 1 <= l <= q-2
        if (l >= 2) {
            d[l * q] = fp.sub(fp.sub(d[(l - 1) * q], d[(l - 1) * q + 1]),
                              c(l * q));
        }
        for (uint64_t j = 1; j <= q - 1; ++j) {
            d[l * q + j] = fp.sub(
                fp.sub(d[(l - 1) * q + j], d[(l - 1) * q + j + 1]),
                c(l * q + j));
        }
    }

    // Tail entries d[q^2-q .. q^2-1] by the closed form (suffix sums of the
    // rhs coefficients above q^2)...
    std::vector<FieldElem> tail(q, fp.zero());
    for (uint64_t j = q; j-- > 0;) {
        tail[j] = c(q * q + j);
        if (j + 1 < q) tail[j] = fp.add(tail[j], tail[j + 1]);
    }
    // ... and by continuing the coefficient recursion one more row; the two
    // must agree, entry by entry.
    const uint64_t l = q - 1;
    std::vector<FieldElem> cont(q, fp.zero());
    cont[0] = fp.sub(fp.sub(d[(l - 1) * q], d[(l - 1) * q + 1]), c(l * q));
    for (uint64_t j = 1; j <= q - 1; ++j) {
        const FieldElem& below = (j == q - 1) ? tail[0] : d[(l - 1) * q + j + 1];
        cont[j] = fp.sub(fp.sub(d[(l - 1) * q + j], below), c(l * q + j));
    }
    for (uint64_t j = 0; j < q; ++j) {
        if (!(tail[j] == cont[j])) {
            throw std::logic_error(
                "tail closed form disagrees with the recursion at index " +
                std::to_string(q * q - q + j));
        }
        d[q * q - q + j] = tail[j];
    }
    return d;
}

SumTable SumTable::build(const Field& field)
{
    require_odd_characteristic(field);
    SumTable t{field, Field::make(field.characteristic(), 1), field.order(),
               {}, {}, {}, {}};
    t.kernel = kernel_coeffs(field);
    t.rhs = rhs_coeffs(field, t.kernel);
    t.reduced = reduced_sum_table(field, t.rhs);
    t.sums.assign(t.q * t.q, t.prime_field.zero());
    for (uint64_t n = 1; n <= t.q * t.q - 1; ++n) {
        t.sums[n] = t.prime_field.add(t.reduced[n],
                                      quarter_point_value(t.prime_field, n));
    }
    return t;
}

FieldElem sum_via_recursion(const Field& field, uint64_t n)
{
    require_odd_characteristic(field);
    const uint64_t q = field.order();
    if (n < 1 || n > q * q - 1) {
        throw std::out_of_range("sum index must lie in 1..q^2-1");
    }

    static std::mutex cache_mutex;
    static std::map<std::pair<uint32_t, uint32_t>,
                    std::shared_ptr<const SumTable>>
        cache;
    std::shared_ptr<const SumTable> table;
    {
        const auto key =
            std::make_pair(field.characteristic(), field.degree());
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) table = it->second;
    }
    if (!table) {
        table = std::make_shared<const SumTable>(SumTable::build(field));
        const auto key =
            std::make_pair(field.characteristic(), field.degree());
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache.emplace(key, table);
    }
    return field.from_int(
        table->prime_field.constant_term(table->sums[n]));
}

bool kernel_identity_holds(const Field& field)
{
    require_odd_characteristic(field);
    const uint64_t q = field.order();
    const Field fp = Field::make(field.characteristic(), 1);

    const DensePoly z = DensePoly::monomial(fp, fp.one(), 1);
    const DensePoly z_minus_1 = z - DensePoly::one(fp);
    const DensePoly lhs =
        kernel_poly_expansion(fp, q) * z_minus_1 *
        (z_minus_1.pow(q - 1) -
         DensePoly::monomial(fp, fp.one(), 2 * (q - 1)));
    const DensePoly rhs =
        z *
        (DensePoly::monomial(fp, fp.one(), q * q - 1) - DensePoly::one(fp)) *
        (DensePoly::monomial(fp, fp.one(), q) -
         DensePoly::monomial(fp, fp.one(), q - 1) - DensePoly::one(fp));
    return lhs == rhs;
}

}  // namespace dickson

#include "dickson/permutation.hpp"

#include <numeric>
#include <unordered_map>

#include "dickson/parallel.hpp"
#include "dickson/reversed_dickson.hpp"

namespace dickson {
namespace {

// n = p^k or n = 2*p^k with k >= 1; returns k or nothing.
std::optional<uint32_t> prime_power_index(uint64_t n, uint32_t p,
                                          bool* doubled)
{
    *doubled = false;
    if (n % 2 == 0) {
        // p is odd, so a factor 2 can only come from the leading 2.
        *doubled = true;
        n /= 2;
    }
    if (n < p) return std::nullopt;
    uint32_t k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    if (n != 1) return std::nullopt;
    return k;
}

std::optional<bool> gcd_criterion(const Field& field, uint64_t n,
                                  bool beyond_degree)
{
    require_odd_characteristic(field);
    bool doubled = false;
    const auto k = prime_power_index(n, field.characteristic(), &doubled);
    if (!k) return std::nullopt;
    if ((*k > field.degree()) != beyond_degree) return std::nullopt;
    uint64_t pk = 1;
    for (uint32_t i = 0; i < *k; ++i) pk *= field.characteristic();
    return std::gcd((pk - 1) / 2, field.order() - 1) == 1;
}

}  // namespace

std::optional<std::string> PPReport::consistency_violation() const
{
    if (is_pp) {
        for (const auto& f : filters) {
            if (f.applicable && !f.passed) {
                return "permutation at n=" + std::to_string(n) +
                       " violates filter " + f.name;
            }
        }
    }
    if (exact_criterion && *exact_criterion != is_pp) {
        return "gcd criterion disagrees with brute force at n=" +
               std::to_string(n);
    }
    if (two_to_one != is_pp) {
        return "two-to-one verdict disagrees with brute force at n=" +
               std::to_string(n);
    }
    return std::nullopt;
}

bool is_permutation_map(const Field& field,
                        const std::function<FieldElem(const FieldElem&)>& f)
{
    std::vector<char> seen(field.order(), 0);
    for (uint64_t i = 0; i < field.order(); ++i) {
        const uint64_t idx = field.index_of(f(field.element_at(i)));
        if (seen[idx]) return false;
        seen[idx] = 1;
    }
    return true;
}

bool is_permutation(const Field& field, uint64_t n)
{
    require_odd_characteristic(field);
    return is_permutation_map(field, [&](const FieldElem& x) {
        return eval_recurrence(field, n, x);
    });
}

std::optional<bool> exact_pp_criterion(const Field& field, uint64_t n)
{
    return gcd_criterion(field, n, /*beyond_degree=*/false);
}

std::optional<bool> exact_criterion_extrapolated_value(const Field& field,
                                                       uint64_t n)
{
    return gcd_criterion(field, n, /*beyond_degree=*/true);
}

FilterResult filter_mod6(const Field& field, uint64_t n)
{
    require_odd_characteristic(field);
    FilterResult r{"mod6", true, true};
    r.passed = (n % 6 != 1) && (n % 6 != 2);
    return r;
}

FilterResult filter_even(const Field& field, uint64_t n)
{
    require_odd_characteristic(field);
    FilterResult r{"even", false, true};
    r.applicable = (n % 2 == 0) && (n % field.characteristic() != 0);
    if (r.applicable) {
        r.passed = (n % 4 == 0) &&
                   std::gcd((n - 1) / 2, field.order() - 1) == 1;
    }
    return r;
}

FilterResult filter_div3(const Field& field, uint64_t n)
{
    require_odd_characteristic(field);
    FilterResult r{"div3", false, true};
    r.applicable = field.characteristic() > 3 && n % 3 == 0;
    if (r.applicable) {
        const uint64_t q = field.order();
        r.passed = std::gcd(n, q * q - 1) == 3;
    }
    return r;
}

TwistedLocus build_twisted_locus(const QuadExt& ext)
{
    const Field& up = ext.ext();
    const uint64_t q = ext.base().order();
    TwistedLocus locus;
    for (uint64_t i = 0; i < up.order(); ++i) {
        const FieldElem x = up.element_at(i);
        if (up.pow(x, q) == up.sub(up.one(), x)) locus.elements.push_back(x);
    }
    if (locus.elements.size() != q) {
        throw std::logic_error("twisted locus has wrong cardinality");
    }
    const FieldElem half =
        ext.embed(ext.base().inv(ext.base().from_int(2)));
    for (const auto& v : locus.elements) {
        if (ext.is_embedded(v) && !(v == half)) {
            throw std::logic_error(
                "twisted locus meets the base field outside 1/2");
        }
    }
    return locus;
}

bool two_to_one_test(const QuadExt& ext, const TwistedLocus& locus,
                     uint64_t n)
{
    const Field& up = ext.ext();
    const Field& base = ext.base();
    const FieldElem half = ext.embed(base.inv(base.from_int(2)));

    // Domain: embedded base field plus the locus, with 1/2 removed. The two
    // sets meet exactly in 1/2, so the domain has 2q - 2 points.
    std::vector<FieldElem> domain;
    domain.reserve(2 * base.order() - 2);
    for (uint64_t i = 0; i < base.order(); ++i) {
        const FieldElem y = ext.embed(base.element_at(i));
        if (!(y == half)) domain.push_back(y);
    }
    for (const auto& y : locus.elements) {
        if (!(y == half)) domain.push_back(y);
    }

    const FieldElem forbidden = ext.embed(quarter_point_value(base, n));
    std::unordered_map<uint64_t, uint32_t> fibers;
    for (const auto& y : domain) {
        const FieldElem one_minus = up.sub(up.one(), y);
        const FieldElem denom =
            up.sub(up.mul(up.from_int(2), y), up.one());
        const FieldElem val =
            up.mul(up.sub(up.pow(y, n), up.pow(one_minus, n)),
                   up.inv(denom));
        if (val == forbidden) return false;
        ++fibers[up.index_of(val)];
    }
    for (const auto& [idx, count] : fibers) {
        if (count != 2) return false;
    }
    return true;
}

bool two_to_one_test(const Field& field, uint64_t n)
{
    const QuadExt ext = quad_ext(field);
    return two_to_one_test(ext, build_twisted_locus(ext), n);
}

bool cayley_square_scan(const Field& field)
{
    require_odd_characteristic(field);
    const QuadExt ext = quad_ext(field);
    const Field& up = ext.ext();
    const uint64_t q = field.order();
    for (uint64_t i = 0; i < up.order(); ++i) {
        const FieldElem eps = up.element_at(i);
        if (up.is_zero(eps) || up.is_one(eps)) continue;
        const FieldElem y =
            up.mul(up.add(eps, up.one()), up.inv(up.sub(eps, up.one())));
        const bool square_in_base = ext.is_embedded(up.mul(y, y));
        const bool unit_norm = up.is_one(up.pow(eps, q + 1)) ||
                               up.is_one(up.pow(eps, q - 1));
        if (square_in_base != unit_norm) return false;
    }
    return true;
}

PPReport pp_report(const QuadExt& ext, const TwistedLocus& locus, uint64_t n)
{
    const Field& field = ext.base();
    PPReport r;
    r.q = field.order();
    r.n = n;
    r.is_pp = is_permutation(field, n);
    r.filters = {filter_mod6(field, n), filter_even(field, n),
                 filter_div3(field, n)};
    r.exact_criterion = exact_pp_criterion(field, n);
    r.exact_criterion_extrapolated =
        exact_criterion_extrapolated_value(field, n);
    r.two_to_one = two_to_one_test(ext, locus, n);
    return r;
}

std::vector<PPReport> scan(const Field& field, uint64_t n_max)
{
    require_odd_characteristic(field);
    const QuadExt ext = quad_ext(field);
    const TwistedLocus locus = build_twisted_locus(ext);
    std::vector<PPReport> reports(n_max + 1);
    parallel_for(0, n_max + 1, [&](uint64_t n) {
        reports[n] = pp_report(ext, locus, n);
    });
    return reports;
}

}  // namespace dickson

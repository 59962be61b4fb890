#include "dickson/verify.hpp"

#include <sstream>

#include "dickson/charsum.hpp"
#include "dickson/parallel.hpp"
#include "dickson/permutation.hpp"
#include "dickson/polynomial.hpp"
#include "dickson/reversed_dickson.hpp"

namespace dickson {
namespace {

CheckResult pass(const std::string& name, const Field& field)
{
    return {name, field.label(), true, ""};
}

CheckResult fail(const std::string& name, const Field& field,
                 const std::string& detail)
{
    return {name, field.label(), false, detail};
}

std::string at(uint64_t n, uint64_t x_index)
{
    std::ostringstream os;
    os << "first mismatch at n=" << n << ", x index " << x_index;
    return os.str();
}

}  // namespace

CheckResult check_field_axioms(const Field& field)
{
    const std::string name = "field_axioms";
    const uint64_t q = field.order();
    const auto elems = field.enumerate();

    // Enumeration order and index round-trip.
    for (uint64_t i = 0; i < q; ++i) {
        if (field.index_of(elems[i]) != i) {
            return fail(name, field, "enumeration order broken at " +
                                         std::to_string(i));
        }
    }
    // (a*b)*inv(b) == a, exhaustive for q <= 81, strided above that.
    const uint64_t stride = q <= 81 ? 1 : q / 81 + 1;
    for (uint64_t i = 0; i < q; i += stride) {
        for (uint64_t j = 1; j < q; ++j) {
            const FieldElem prod = field.mul(elems[i], elems[j]);
            if (!(field.mul(prod, field.inv(elems[j])) == elems[i])) {
                return fail(name, field, "mul/inv round trip failed");
            }
        }
    }
    // pow(a, q-1) == 1 for a != 0 and pow(a, q) == a for all a.
    for (uint64_t i = 0; i < q; ++i) {
        if (i != 0 && !field.is_one(field.pow(elems[i], q - 1))) {
            return fail(name, field, "pow(a, q-1) != 1 at index " +
                                         std::to_string(i));
        }
        if (!(field.pow(elems[i], q) == elems[i])) {
            return fail(name, field, "pow(a, q) != a at index " +
                                         std::to_string(i));
        }
    }
    // mod_xq_minus_x preserves evaluation for degrees up to 2q.
    for (uint64_t seed = 1; seed <= 3; ++seed) {
        std::vector<FieldElem> coeffs;
        for (uint64_t i = 0; i <= 2 * q; ++i) {
            coeffs.push_back(elems[(i * seed + 7) % q]);
        }
        const DensePoly poly = DensePoly::from_coeffs(field, coeffs);
        const DensePoly reduced = poly.mod_xq_minus_x(q);
        if (reduced.degree() >= static_cast<int64_t>(q)) {
            return fail(name, field, "mod_xq_minus_x degree bound violated");
        }
        for (uint64_t i = 0; i < q; ++i) {
            if (!(poly.eval(elems[i]) == reduced.eval(elems[i]))) {
                return fail(name, field,
                            "mod_xq_minus_x changed a value at index " +
                                std::to_string(i));
            }
        }
    }
    return pass(name, field);
}

CheckResult check_three_oracle_agreement(const Field& field)
{
    const std::string name = "three_oracle_agreement";
    const uint64_t q = field.order();
    const uint64_t n_max = q * q - 1;
    const QuadExt ext = quad_ext(field);

    // recurrence vs functional vs Jacobsthal, x-major.
    std::vector<std::vector<FieldElem>> recurrence(q);
    for (uint64_t xi = 0; xi < q; ++xi) {
        const FieldElem x = field.element_at(xi);
        recurrence[xi] = recurrence_series(field, n_max, x);
        for (uint64_t n = 0; n <= n_max; ++n) {
            if (!(eval_functional(ext, n, x) == recurrence[xi][n])) {
                return fail(name, field, "functional: " + at(n, xi));
            }
            if (!(jacobsthal_substitution(field, n, x) ==
                  recurrence[xi][n])) {
                return fail(name, field, "jacobsthal: " + at(n, xi));
            }
        }
    }
    // coefficient route, n-major so each polynomial is built once.
    const FieldElem one = field.one();
    for (uint64_t n = 0; n <= n_max; ++n) {
        const DensePoly poly = coeff_poly(field, n, 2);
        for (uint64_t xi = 0; xi < q; ++xi) {
            const FieldElem x = field.element_at(xi);
            if (!(poly.eval(x) == recurrence[xi][n]) ||
                !(eval_coefficient(field, n, one, x) == recurrence[xi][n])) {
                return fail(name, field, "coefficient: " + at(n, xi));
            }
        }
    }
    return pass(name, field);
}

CheckResult check_quarter_point(const Field& field)
{
    const std::string name = "quarter_point";
    const uint64_t q = field.order();
    const FieldElem quarter = field.inv(field.from_int(4));
    const auto series = recurrence_series(field, 2 * q * q, quarter);
    for (uint64_t n = 0; n <= 2 * q * q; ++n) {
        if (!(series[n] == quarter_point_value(field, n))) {
            return fail(name, field,
                        "value at n=" + std::to_string(n) + " disagrees");
        }
    }
    return pass(name, field);
}

CheckResult check_frobenius_lift(const Field& field)
{
    const std::string name = "frobenius_lift";
    for (uint32_t k = 1; k <= 2; ++k) {
        uint64_t pk = 1;
        for (uint32_t i = 0; i < k; ++i) pk *= field.characteristic();
        for (uint64_t n = 0; n <= 50; ++n) {
            for (uint64_t xi = 0; xi < field.order(); ++xi) {
                const FieldElem x = field.element_at(xi);
                if (!(eval_recurrence(field, n * pk, x) ==
                      frobenius_lift(field, n, k, x))) {
                    return fail(name, field,
                                "n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k) + ", x index " +
                                    std::to_string(xi));
                }
            }
        }
    }
    return pass(name, field);
}

CheckResult check_periodicity(const Field& field)
{
    const std::string name = "periodicity";
    const uint64_t q = field.order();
    const uint64_t period = q * q - 1;
    const FieldElem quarter = field.inv(field.from_int(4));
    for (uint64_t xi = 0; xi < q; ++xi) {
        const FieldElem x = field.element_at(xi);
        if (x == quarter) continue;
        const auto series = recurrence_series(field, 2 * period, x);
        for (uint64_t n = 1; n <= period; ++n) {
            if (!(series[n] == series[n + period])) {
                return fail(name, field, at(n, xi));
            }
        }
    }
    return pass(name, field);
}

CheckResult check_odd_binomial_form(const Field& field)
{
    const std::string name = "odd_binomial_form";
    const uint64_t q = field.order();
    const uint64_t n_max = q * q - 1;
    const FieldElem inv2 = field.inv(field.from_int(2));
    std::vector<std::vector<FieldElem>> recurrence(q);
    std::vector<FieldElem> shifted(q);  // 1 - 4x per x index
    for (uint64_t xi = 0; xi < q; ++xi) {
        const FieldElem x = field.element_at(xi);
        recurrence[xi] = recurrence_series(field, n_max, x);
        shifted[xi] =
            field.sub(field.one(), field.mul(field.from_int(4), x));
    }
    FieldElem half_power = field.one();  // (1/2)^(n-1), tracked from n=1
    for (uint64_t n = 1; n <= n_max; ++n) {
        if (n > 1) half_power = field.mul(half_power, inv2);
        const DensePoly aux = odd_binomial_poly(field, n);
        for (uint64_t xi = 0; xi < q; ++xi) {
            const FieldElem rhs =
                field.mul(half_power, aux.eval(shifted[xi]));
            if (!(rhs == recurrence[xi][n])) {
                return fail(name, field, at(n, xi));
            }
        }
    }
    return pass(name, field);
}

CheckResult check_self_reciprocal(const Field& field)
{
    const std::string name = "self_reciprocal";
    const uint64_t q = field.order();
    for (uint64_t n = 2; n <= 100; n += 2) {
        if (n % field.characteristic() == 0) continue;
        const DensePoly aux = odd_binomial_poly(field, n);
        for (uint64_t xi = 1; xi < q; ++xi) {
            const FieldElem x = field.element_at(xi);
            const FieldElem lhs = aux.eval(x);
            const FieldElem rhs = field.mul(field.pow(x, (n - 1) / 2),
                                            aux.eval(field.inv(x)));
            if (!(lhs == rhs)) return fail(name, field, at(n, xi));
        }
    }
    return pass(name, field);
}

CheckResult check_known_values(const Field& field)
{
    const std::string name = "known_values";
    const uint32_t p = field.characteristic();
    // F_n(1, 1) follows the period-6 pattern 0, 1, 1, 0, -1, -1.
    const uint32_t table[6] = {0, 1, 1, 0, p - 1, p - 1};
    const auto at_one = recurrence_series(field, 100, field.one());
    for (uint64_t n = 0; n <= 100; ++n) {
        if (!(at_one[n] == field.from_int(table[n % 6]))) {
            return fail(name, field,
                        "period-6 value at n=" + std::to_string(n));
        }
    }
    // F_n(1, 0) = 1 for n >= 1.
    const auto at_zero = recurrence_series(field, 100, field.zero());
    for (uint64_t n = 1; n <= 100; ++n) {
        if (!field.is_one(at_zero[n])) {
            return fail(name, field, "value at x=0, n=" + std::to_string(n));
        }
    }
    // F_0 = 0, F_1 = 1, F_2 = 1 identically.
    for (uint64_t xi = 0; xi < field.order(); ++xi) {
        const FieldElem x = field.element_at(xi);
        if (!field.is_zero(eval_recurrence(field, 0, x)) ||
            !field.is_one(eval_recurrence(field, 1, x)) ||
            !field.is_one(eval_recurrence(field, 2, x))) {
            return fail(name, field,
                        "constant fixture at x index " + std::to_string(xi));
        }
    }
    return pass(name, field);
}

CheckResult check_kind_relation(const Field& field)
{
    const std::string name = "kind_relation";
    const DensePoly two =
        DensePoly::constant(field, field.from_int(2));
    for (uint64_t n = 0; n <= 200; ++n) {
        const DensePoly third = coeff_poly(field, n, 2);
        const DensePoly second = coeff_poly(field, n, 1);
        const DensePoly first = coeff_poly(field, n, 0);
        if (!(third == two * second - first)) {
            return fail(name, field, "relation fails at n=" +
                                         std::to_string(n));
        }
    }
    return pass(name, field);
}

CheckResult check_exact_pp_criteria(const Field& field)
{
    const std::string name = "exact_pp_criteria";
    uint64_t pk = 1;
    for (uint32_t k = 1; k <= field.degree(); ++k) {
        pk *= field.characteristic();
        for (const uint64_t n : {pk, 2 * pk}) {
            const auto criterion = exact_pp_criterion(field, n);
            if (!criterion) {
                return fail(name, field, "criterion absent at n=" +
                                             std::to_string(n));
            }
            if (*criterion != is_permutation(field, n)) {
                return fail(name, field, "criterion wrong at n=" +
                                             std::to_string(n));
            }
        }
    }
    return pass(name, field);
}

CheckResult check_filter_soundness(const Field& field)
{
    const std::string name = "filter_soundness";
    const uint64_t q = field.order();
    for (uint64_t n = 0; n <= q * q - 1; ++n) {
        if (!is_permutation(field, n)) continue;
        for (const auto& f : {filter_mod6(field, n), filter_even(field, n),
                              filter_div3(field, n)}) {
            if (f.applicable && !f.passed) {
                return fail(name, field,
                            "permutation n=" + std::to_string(n) +
                                " violates filter " + f.name);
            }
        }
    }
    return pass(name, field);
}

CheckResult check_two_to_one_agreement(const Field& field)
{
    const std::string name = "two_to_one_agreement";
    const uint64_t q = field.order();
    const QuadExt ext = quad_ext(field);
    const TwistedLocus locus = build_twisted_locus(ext);
    for (uint64_t n = 0; n <= q * q - 1; ++n) {
        if (two_to_one_test(ext, locus, n) != is_permutation(field, n)) {
            return fail(name, field,
                        "verdicts disagree at n=" + std::to_string(n));
        }
    }
    return pass(name, field);
}

CheckResult check_pp_transfer(const Field& field)
{
    const std::string name = "pp_transfer";
    const uint64_t q = field.order();
    for (uint64_t n = 0; n <= q * q - 1; ++n) {
        const DensePoly aux = odd_binomial_poly(field, n);
        const bool aux_pp = is_permutation_map(
            field, [&](const FieldElem& x) { return aux.eval(x); });
        if (aux_pp != is_permutation(field, n)) {
            return fail(name, field,
                        "transfer fails at n=" + std::to_string(n));
        }
    }
    return pass(name, field);
}

CheckResult check_twisted_locus(const Field& field)
{
    const std::string name = "twisted_locus";
    const uint64_t q = field.order();
    const QuadExt ext = quad_ext(field);
    TwistedLocus locus;
    try {
        locus = build_twisted_locus(ext);  // checks |V| = q and V meets F_q in 1/2
    } catch (const std::logic_error& e) {
        return fail(name, field, e.what());
    }
    const Field& up = ext.ext();
    for (const auto& v : locus.elements) {
        if (!(up.pow(v, q) == up.sub(up.one(), v))) {
            return fail(name, field, "locus element fails its equation");
        }
    }
    // x(1-x) lies in the base field exactly when x^q = x or x^q = 1 - x.
    for (uint64_t i = 0; i < up.order(); ++i) {
        const FieldElem x = up.element_at(i);
        const FieldElem xq = up.pow(x, q);
        const bool member =
            ext.is_embedded(up.mul(x, up.sub(up.one(), x)));
        const bool fixed_or_reflected =
            (xq == x) || (xq == up.sub(up.one(), x));
        if (member != fixed_or_reflected) {
            return fail(name, field,
                        "membership biconditional fails at extension index " +
                            std::to_string(i));
        }
    }
    return pass(name, field);
}

CheckResult check_cayley_square(const Field& field)
{
    const std::string name = "cayley_square";
    if (!cayley_square_scan(field)) {
        return fail(name, field, "biconditional has a counterexample");
    }
    return pass(name, field);
}

CheckResult check_charsum_equivalence(const Field& field)
{
    const std::string name = "charsum_equivalence";
    const uint64_t q = field.order();
    try {
        const SumTable table = SumTable::build(field);
        for (uint64_t n = 1; n <= q * q - 1; ++n) {
            const FieldElem recursive =
                field.from_int(table.prime_field.constant_term(table.sums[n]));
            if (!(recursive == sum_bruteforce(field, n))) {
                return fail(name, field,
                            "sums disagree at n=" + std::to_string(n));
            }
        }
    } catch (const std::logic_error& e) {
        return fail(name, field, e.what());
    }
    return pass(name, field);
}

CheckResult check_kernel_identity(const Field& field)
{
    const std::string name = "kernel_identity";
    try {
        kernel_coeffs(field);  // throws when the two routes disagree
    } catch (const std::logic_error& e) {
        return fail(name, field, e.what());
    }
    if (!kernel_identity_holds(field)) {
        return fail(name, field, "cross-multiplied identity fails");
    }
    return pass(name, field);
}

CheckResult check_genfun_truncation(const Field& field)
{
    const std::string name = "genfun_truncation";
    const uint64_t q = field.order();
    const uint64_t trunc = 2 * q * q;
    for (uint64_t xi = 0; xi < q; ++xi) {
        const FieldElem x = field.element_at(xi);
        // Series built from the coefficient route, so this ties the closed
        // coefficients to their generating function.
        std::vector<FieldElem> series;
        series.reserve(trunc + 1);
        for (uint64_t n = 0; n <= trunc; ++n) {
            series.push_back(coeff_poly(field, n, 2).eval(x));
        }
        const DensePoly s = DensePoly::from_coeffs(field, series);
        const DensePoly denom =
            DensePoly::one(field) -
            DensePoly::monomial(field, field.one(), 1) +
            DensePoly::monomial(field, x, 2);
        const DensePoly product = denom * s;
        if (!field.is_zero(product.coeff(0)) ||
            !field.is_one(product.coeff(1))) {
            return fail(name, field, "leading coefficients wrong at x index " +
                                         std::to_string(xi));
        }
        for (uint64_t m = 2; m <= trunc; ++m) {
            if (!field.is_zero(product.coeff(m))) {
                return fail(name, field, at(m, xi));
            }
        }
    }
    return pass(name, field);
}

CheckResult check_sum_necessary(const Field& field)
{
    const std::string name = "sum_necessary";
    const uint64_t q = field.order();
    for (uint64_t n = 0; n <= q * q - 1; ++n) {
        if (!is_permutation(field, n)) continue;
        if (!field.is_zero(sum_bruteforce(field, n))) {
            return fail(name, field,
                        "nonzero sum at permutation n=" + std::to_string(n));
        }
    }
    return pass(name, field);
}

CheckResult check_sum_clause_forms(const Field& field)
{
    const std::string name = "sum_clause_forms";
    const uint64_t q = field.order();
    const SumTable table = SumTable::build(field);
    const Field& fp = table.prime_field;
    const FieldElem two = fp.from_int(2);
    auto c = [&](uint64_t k) { return table.rhs[k]; };
    auto f = [&](uint64_t n) { return table.sums[n]; };
    auto half_pow = [&](uint64_t m) {  // 1 / 2^m
        return fp.inv(fp.pow(two, m));
    };

    for (uint64_t j = 1; j <= q - 1; ++j) {
        const FieldElem expect =
            fp.add(fp.neg(c(j)), quarter_point_value(fp, j));
        if (!(f(j) == expect)) {
            return fail(name, field, "low clause at j=" + std::to_string(j));
        }
    }
    if (!(f(q) == fp.sub(c(1), c(q)))) {
        return fail(name, field, "clause at n=q");
    }
    for (uint64_t l = 1; l + 2 <= q; ++l) {
        for (uint64_t j = 1; j <= q - 1; ++j) {
            // correction (2^q (1-j) + 2j) / 2^(lq+j)
            const FieldElem numerator =
                fp.add(fp.mul(fp.pow(two, q),
                              fp.sub(fp.one(), fp.from_int(j))),
                       fp.from_int(2 * j));
            const FieldElem expect =
                fp.add(fp.sub(fp.sub(f((l - 1) * q + j), f((l - 1) * q + j + 1)),
                              c(l * q + j)),
                       fp.mul(numerator, half_pow(l * q + j)));
            if (!(f(l * q + j) == expect)) {
                return fail(name, field,
                            "row clause at l=" + std::to_string(l) +
                                ", j=" + std::to_string(j));
            }
        }
        if (l >= 2) {
            const FieldElem expect = fp.add(
                fp.sub(fp.sub(f((l - 1) * q), f((l - 1) * q + 1)), c(l * q)),
                half_pow((l - 1) * q));
            if (!(f(l * q) == expect)) {
                return fail(name, field,
                            "column clause at l=" + std::to_string(l));
            }
        }
    }
    for (uint64_t j = 0; j <= q - 1; ++j) {
        FieldElem suffix = fp.zero();
        for (uint64_t i = j; i <= q - 1; ++i) {
            suffix = fp.add(suffix, c(q * q + i));
        }
        const FieldElem expect = fp.add(
            suffix, fp.mul(fp.from_int(j), half_pow(q * q - q + j - 1)));
        if (!(f(q * q - q + j) == expect)) {
            return fail(name, field, "tail clause at j=" + std::to_string(j));
        }
    }
    return pass(name, field);
}

const std::vector<CheckSpec>& verification_checks()
{
    static const std::vector<CheckSpec> specs = {
        {"field_axioms", check_field_axioms, {3, 5, 7, 9, 25, 27}},
        {"three_oracle_agreement", check_three_oracle_agreement,
         {3, 5, 7, 9, 11, 13, 25, 27}},
        {"quarter_point", check_quarter_point, {3, 5, 7, 9, 11, 13, 25, 27}},
        {"frobenius_lift", check_frobenius_lift, {3, 5, 7, 9}},
        {"periodicity", check_periodicity, {3, 5, 7, 9}},
        {"odd_binomial_form", check_odd_binomial_form, {3, 5, 7, 9, 11, 13}},
        {"self_reciprocal", check_self_reciprocal, {3, 5, 7, 9, 11, 13}},
        {"known_values", check_known_values, {3, 5, 7, 9, 11, 13}},
        {"kind_relation", check_kind_relation, {3, 5, 7, 9, 11, 13}},
        {"exact_pp_criteria", check_exact_pp_criteria,
         {3, 5, 7, 9, 11, 13, 25, 27}},
        {"filter_soundness", check_filter_soundness,
         {3, 5, 7, 9, 11, 13, 25, 27}},
        {"two_to_one_agreement", check_two_to_one_agreement, {3, 5, 7, 9}},
        {"pp_transfer", check_pp_transfer, {3, 5, 7, 9}},
        {"twisted_locus", check_twisted_locus, {3, 5, 7, 9}},
        {"cayley_square", check_cayley_square, {3, 5, 7, 9}},
        {"charsum_equivalence", check_charsum_equivalence, {3, 5, 7, 9, 13}},
        {"kernel_identity", check_kernel_identity, {3, 5, 7, 9, 13}},
        {"genfun_truncation", check_genfun_truncation, {3, 5, 7}},
        {"sum_necessary", check_sum_necessary, {3, 5, 7, 9, 13}},
        {"sum_clause_forms", check_sum_clause_forms, {3, 5, 7}},
    };
    return specs;
}

std::vector<CheckResult> run_verification(const std::vector<Field>& fields,
                                          bool full)
{
    const auto& specs = verification_checks();
    struct Job {
        const CheckSpec* spec;
        Field field;
    };
    std::vector<Job> jobs;
    for (const auto& spec : specs) {
        if (!fields.empty()) {
            for (const auto& f : fields) jobs.push_back({&spec, f});
        } else if (full) {
            for (uint64_t qv : spec.full_orders) {
                jobs.push_back({&spec, field_from_order(qv)});
            }
        } else {
            for (uint64_t qv : {3, 5, 7}) {
                jobs.push_back({&spec, field_from_order(qv)});
            }
        }
    }
    std::vector<CheckResult> results(jobs.size());
    parallel_for(0, jobs.size(), [&](uint64_t i) {
        try {
            results[i] = jobs[i].spec->fn(jobs[i].field);
        } catch (const std::exception& e) {
            results[i] = {jobs[i].spec->name, jobs[i].field.label(), false,
                          std::string("exception: ") + e.what()};
        }
    });
    return results;
}

}  // namespace dickson

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dickson/field.hpp"

namespace dickson {

/// Outcome of one necessary-condition filter for a given (q, n).
/// Inapplicable filters report passed = true so that soundness reads
/// uniformly as "is_pp implies every filter passed".
struct FilterResult {
    std::string name;
    bool applicable = false;
    bool passed = true;
};

/// Verdict of the exhaustive permutation test plus every cross-check for
/// one (q, n).
struct PPReport {
    uint64_t q = 0;
    uint64_t n = 0;
    bool is_pp = false;
    std::vector<FilterResult> filters;
    /// gcd criterion when n = p^k or 2*p^k with k <= e; must match is_pp.
    std::optional<bool> exact_criterion;
    /// Same gcd criterion for k > e, where no exactness is claimed; recorded
    /// for empirical comparison only and never asserted.
    std::optional<bool> exact_criterion_extrapolated;
    bool two_to_one = false;

    /// Description of the first violated cross-check, or absent when the
    /// report is internally consistent.
    std::optional<std::string> consistency_violation() const;
};

/// True iff x -> F_n(1, x) hits every element of the field exactly once;
/// brute force with a presence table over the recurrence evaluator.
bool is_permutation(const Field& field, uint64_t n);

/// Brute-force bijectivity of an arbitrary map on the field.
bool is_permutation_map(const Field& field,
                        const std::function<FieldElem(const FieldElem&)>& f);

/// The gcd criterion gcd((p^k - 1)/2, q - 1) == 1 that decides the
/// permutation property exactly at n = p^k and n = 2*p^k for 1 <= k <= e;
/// absent for every other n (including k > e, see
/// exact_criterion_extrapolated_value).
std::optional<bool> exact_pp_criterion(const Field& field, uint64_t n);

/// The same gcd value at n = p^k or 2*p^k with k > e, where the exactness
/// statement does not apply; gathered for empirical comparison.
std::optional<bool> exact_criterion_extrapolated_value(const Field& field,
                                                       uint64_t n);

/// Necessary condition: a permutation index never satisfies
/// n = 1 or 2 (mod 6). Applicable for every n in odd characteristic.
FilterResult filter_mod6(const Field& field, uint64_t n);

/// Necessary condition for even n not divisible by p: n = 0 (mod 4) and
/// gcd(floor((n-1)/2), q-1) = 1.
FilterResult filter_even(const Field& field, uint64_t n);

/// Necessary condition for p > 3 and 3 | n: gcd(n, q^2 - 1) = 3.
FilterResult filter_div3(const Field& field, uint64_t n);

/// The locus {x in GF(q^2) : x^q = 1 - x} complementing the base field in
/// the y-parameterization; always has exactly q elements and meets the
/// embedded base field exactly in 1/2.
struct TwistedLocus {
    std::vector<FieldElem> elements;  // in ascending extension order
};

/// Builds the twisted locus, verifying both cardinality and the
/// intersection property; throws std::logic_error if either fails.
TwistedLocus build_twisted_locus(const QuadExt& ext);

/// Criterion equivalent to the permutation property: y -> (y^n - (1-y)^n)
/// / (2y - 1) restricted to (F_q union locus) minus {1/2} is 2-to-1 and
/// never takes the value n/2^(n-1).
bool two_to_one_test(const QuadExt& ext, const TwistedLocus& locus,
                     uint64_t n);

/// Convenience overload constructing the extension and locus per call.
bool two_to_one_test(const Field& field, uint64_t n);

/// Scans every epsilon in GF(q^2) outside {0, 1}: with the Cayley-style
/// ratio y = (eps+1)/(eps-1), checks that y^2 lies in the embedded base
/// field exactly when eps^(q+1) = 1 or eps^(q-1) = 1. Returns true when no
/// counterexample exists.
bool cayley_square_scan(const Field& field);

/// Full report for a single index. The extension and locus are shared,
/// immutable inputs so scans can reuse them across n.
PPReport pp_report(const QuadExt& ext, const TwistedLocus& locus, uint64_t n);

/// Reports for n = 0..n_max, computed in parallel, ordered by n.
std::vector<PPReport> scan(const Field& field, uint64_t n_max);

}  // namespace dickson

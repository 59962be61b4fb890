#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dickson/field.hpp"

namespace dickson {

/// Outcome of one verification check on one field.
struct CheckResult {
    std::string check;
    std::string field_label;
    bool passed = false;
    std::string detail;  // first failure description, empty when passed
};

using CheckFn = CheckResult (*)(const Field&);

/// A named check together with the field list it is specified to cover in a
/// full verification run.
struct CheckSpec {
    std::string name;
    CheckFn fn;
    std::vector<uint64_t> full_orders;
};

/// Every verification check, in report order.
const std::vector<CheckSpec>& verification_checks();

/// Runs the checks. With an explicit field list, every check runs on
/// exactly those fields; otherwise quick mode uses q in {3,5,7} everywhere
/// and full mode uses each check's own field list. Work is distributed
/// across worker threads; results come back in deterministic order.
std::vector<CheckResult> run_verification(const std::vector<Field>& fields,
                                          bool full);

// Individual checks (each exhaustive over its documented range).
CheckResult check_field_axioms(const Field& field);
CheckResult check_three_oracle_agreement(const Field& field);
CheckResult check_quarter_point(const Field& field);
CheckResult check_frobenius_lift(const Field& field);
CheckResult check_periodicity(const Field& field);
CheckResult check_odd_binomial_form(const Field& field);
CheckResult check_self_reciprocal(const Field& field);
CheckResult check_known_values(const Field& field);
CheckResult check_kind_relation(const Field& field);
CheckResult check_exact_pp_criteria(const Field& field);
CheckResult check_filter_soundness(const Field& field);
CheckResult check_two_to_one_agreement(const Field& field);
CheckResult check_pp_transfer(const Field& field);
CheckResult check_twisted_locus(const Field& field);
CheckResult check_cayley_square(const Field& field);
CheckResult check_charsum_equivalence(const Field& field);
CheckResult check_kernel_identity(const Field& field);
CheckResult check_genfun_truncation(const Field& field);
CheckResult check_sum_necessary(const Field& field);
CheckResult check_sum_clause_forms(const Field& field);

}  // namespace dickson

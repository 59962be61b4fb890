#include "dickson/reversed_dickson.hpp"

#include <gtest/gtest.h>

namespace {

using dickson::DensePoly;
using dickson::Field;
using dickson::FieldElem;

DensePoly poly_from_ints(const Field& f, const std::vector<uint64_t>& values)
{
    std::vector<FieldElem> coeffs;
    for (uint64_t v : values) coeffs.push_back(f.from_int(v));
    return DensePoly::from_coeffs(f, std::move(coeffs));
}

// Oracle: the polynomial recurrence F_0 = 0, F_1 = 1, F_k = F_{k-1} - x F_{k-2},
// entirely independent of the binomial-coefficient construction.
std::vector<DensePoly> polynomial_orbit(const Field& f, uint64_t n_max)
{
    std::vector<DensePoly> out{DensePoly::zero(f), DensePoly::one(f)};
    const DensePoly x = DensePoly::monomial(f, f.one(), 1);
    for (uint64_t k = 2; k <= n_max; ++k) {
        out.push_back(out[k - 1] - x * out[k - 2]);
    }
    return out;
}

// Oracle: binomial coefficients from a Pascal triangle in plain integers
// (safe through n = 60 in 64 bits).
std::vector<std::vector<uint64_t>> pascal_rows(uint64_t n_max)
{
    std::vector<std::vector<uint64_t>> rows(n_max + 1);
    for (uint64_t n = 0; n <= n_max; ++n) {
        rows[n].assign(n + 1, 1);
        for (uint64_t k = 1; k < n; ++k) {
            rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
        }
    }
    return rows;
}

TEST(CoeffPolyTest, ConstantsAtIndexZero)
{
    const Field f7 = Field::make(7, 1);
    EXPECT_TRUE(dickson::coeff_poly(f7, 0, 2).is_zero());  // 2 - k = 0
    EXPECT_EQ(dickson::coeff_poly(f7, 0, 1), DensePoly::one(f7));
    EXPECT_EQ(dickson::coeff_poly(f7, 0, 0), poly_from_ints(f7, {2}));
}

TEST(CoeffPolyTest, FrozenSmallPolynomials)
{
    const Field f7 = Field::make(7, 1);
    // F_4 = 1 - 2x and F_5 = 1 - 3x + x^2, frozen from the polynomial
    // recurrence oracle.
    EXPECT_EQ(dickson::coeff_poly(f7, 4, 2), poly_from_ints(f7, {1, 5}));
    EXPECT_EQ(dickson::coeff_poly(f7, 5, 2), poly_from_ints(f7, {1, 4, 1}));
    // Second and first kinds at n = 2: 1 - x and 1 - 2x.
    const Field f5 = Field::make(5, 1);
    EXPECT_EQ(dickson::coeff_poly(f5, 2, 1), poly_from_ints(f5, {1, 4}));
    EXPECT_EQ(dickson::coeff_poly(f5, 2, 0), poly_from_ints(f5, {1, 3}));
}

TEST(CoeffPolyTest, MatchesPolynomialRecurrenceOrbit)
{
    for (const uint64_t q : {3u, 7u, 9u}) {
        const Field f = dickson::field_from_order(q);
        const auto orbit = polynomial_orbit(f, 60);
        for (uint64_t n = 0; n <= 60; ++n) {
            EXPECT_EQ(dickson::coeff_poly(f, n, 2), orbit[n])
                << "q=" << q << " n=" << n;
        }
    }
}

TEST(CoeffPolyTest, KindRelationOnPolynomials)
{
    const Field f5 = Field::make(5, 1);
    const DensePoly two = DensePoly::constant(f5, f5.from_int(2));
    for (uint64_t n = 0; n <= 80; ++n) {
        EXPECT_EQ(dickson::coeff_poly(f5, n, 2),
                  two * dickson::coeff_poly(f5, n, 1) -
                      dickson::coeff_poly(f5, n, 0));
    }
}

TEST(CoeffPolyTest, RejectsKindAboveTwo)
{
    EXPECT_THROW(dickson::coeff_poly(Field::make(5, 1), 3, 3),
                 std::invalid_argument);
}

TEST(RecurrenceTest, Examples)
{
    const Field f7 = Field::make(7, 1);
    for (uint64_t xi = 0; xi < 7; ++xi) {
        EXPECT_TRUE(f7.is_zero(
            dickson::eval_recurrence(f7, 0, f7.element_at(xi))));
    }
    EXPECT_EQ(dickson::eval_recurrence(f7, 5, f7.from_int(2)),
              f7.from_int(6));
    // x = 2 is 1/4 in GF(7): the value must match n / 2^(n-1) = 5 * inv(2)^4.
    EXPECT_EQ(f7.mul(f7.from_int(5), f7.pow(f7.inv(f7.from_int(2)), 4)),
              f7.from_int(6));
    EXPECT_EQ(dickson::quarter_point_value(f7, 5), f7.from_int(6));
}

TEST(RecurrenceTest, SeriesMatchesPointEvaluation)
{
    const Field f9 = Field::make(3, 2);
    for (uint64_t xi = 0; xi < 9; ++xi) {
        const FieldElem x = f9.element_at(xi);
        const auto series = dickson::recurrence_series(f9, 40, x);
        for (uint64_t n = 0; n <= 40; ++n) {
            EXPECT_EQ(series[n], dickson::eval_recurrence(f9, n, x));
        }
    }
}

TEST(CoefficientEvalTest, ZeroParameterGivesZeroFunction)
{
    const Field f7 = Field::make(7, 1);
    for (uint64_t n : {0u, 1u, 6u, 11u}) {
        for (uint64_t xi = 0; xi < 7; ++xi) {
            EXPECT_TRUE(f7.is_zero(dickson::eval_coefficient(
                f7, n, f7.zero(), f7.element_at(xi))));
        }
    }
}

TEST(CoefficientEvalTest, GeneralParameterExample)
{
    const Field f7 = Field::make(7, 1);
    // a=2, x=1, n=3: 2^3 * F_3(1, 1/4) = 1 * (1 - 2) = -1 = 6.
    EXPECT_EQ(dickson::eval_coefficient(f7, 3, f7.from_int(2), f7.one()),
              f7.from_int(6));
    // Scaling law against the recurrence at x / a^2, all (a, x) pairs.
    for (uint64_t ai = 1; ai < 7; ++ai) {
        for (uint64_t xi = 0; xi < 7; ++xi) {
            const FieldElem a = f7.element_at(ai);
            const FieldElem x = f7.element_at(xi);
            const FieldElem scaled =
                f7.mul(x, f7.inv(f7.mul(a, a)));
            EXPECT_EQ(dickson::eval_coefficient(f7, 9, a, x),
                      f7.mul(f7.pow(a, 9),
                             dickson::eval_recurrence(f7, 9, scaled)));
        }
    }
}

TEST(CoefficientEvalTest, IndexTwoIsConstantOne)
{
    for (const uint64_t q : {3u, 5u, 9u}) {
        const Field f = dickson::field_from_order(q);
        for (uint64_t xi = 0; xi < q; ++xi) {
            EXPECT_TRUE(f.is_one(dickson::eval_coefficient(
                f, 2, f.one(), f.element_at(xi))));
        }
    }
}

TEST(FunctionalEvalTest, Examples)
{
    const Field f7 = Field::make(7, 1);
    EXPECT_EQ(dickson::eval_functional(f7, 5, f7.from_int(2)),
              f7.from_int(6));  // quarter-point branch
    EXPECT_TRUE(f7.is_one(dickson::eval_functional(f7, 9, f7.zero())));

    const Field f5 = Field::make(5, 1);
    EXPECT_EQ(dickson::eval_functional(f5, 4, f5.one()), f5.from_int(4));
}

TEST(FunctionalEvalTest, AgreesWithRecurrenceOnExtensionField)
{
    const Field f9 = Field::make(3, 2);
    const dickson::QuadExt ext = dickson::quad_ext(f9);
    for (uint64_t xi = 0; xi < 9; ++xi) {
        const FieldElem x = f9.element_at(xi);
        for (uint64_t n = 0; n <= 40; ++n) {
            EXPECT_EQ(dickson::eval_functional(ext, n, x),
                      dickson::eval_recurrence(f9, n, x));
        }
    }
}

TEST(OddBinomialTest, ValueFixtures)
{
    const Field f7 = Field::make(7, 1);
    for (uint64_t n = 1; n <= 50; ++n) {
        // f_n(0) = n and f_n(1) = 2^(n-1), both mod p.
        EXPECT_EQ(dickson::odd_binomial_eval(f7, n, f7.zero()),
                  f7.from_int(n));
        EXPECT_EQ(dickson::odd_binomial_eval(f7, n, f7.one()),
                  f7.pow(f7.from_int(2), n - 1));
    }
    EXPECT_EQ(dickson::odd_binomial_poly(f7, 4), poly_from_ints(f7, {4, 4}));
}

TEST(OddBinomialTest, MatchesPascalOracle)
{
    const auto rows = pascal_rows(60);
    for (const uint64_t q : {5u, 7u}) {
        const Field f = dickson::field_from_order(q);
        for (uint64_t n = 0; n <= 60; ++n) {
            const DensePoly poly = dickson::odd_binomial_poly(f, n);
            for (uint64_t j = 0; 2 * j + 1 <= std::max<uint64_t>(n, 1); ++j) {
                const uint64_t expected =
                    2 * j + 1 <= n ? rows[n][2 * j + 1] : 0;
                EXPECT_EQ(poly.coeff(j), f.from_int(expected))
                    << "n=" << n << " j=" << j;
            }
        }
    }
}

TEST(FrobeniusLiftTest, DegreeOneExample)
{
    // In GF(3) with n=1, k=1 the lift is (1-4x)^1 = 1 - x.
    const Field f3 = Field::make(3, 1);
    for (uint64_t xi = 0; xi < 3; ++xi) {
        const FieldElem x = f3.element_at(xi);
        EXPECT_EQ(dickson::frobenius_lift(f3, 1, 1, x),
                  f3.sub(f3.one(), x));
    }
}

TEST(FrobeniusLiftTest, QuarterPointVanishes)
{
    const Field f5 = Field::make(5, 1);
    const FieldElem quarter = f5.inv(f5.from_int(4));
    for (uint64_t n = 1; n <= 10; ++n) {
        for (uint32_t k = 1; k <= 2; ++k) {
            EXPECT_TRUE(
                f5.is_zero(dickson::frobenius_lift(f5, n, k, quarter)));
        }
    }
}

TEST(FrobeniusLiftTest, MatchesDirectRecurrence)
{
    const Field f5 = Field::make(5, 1);
    EXPECT_EQ(dickson::frobenius_lift(f5, 2, 1, f5.from_int(3)),
              dickson::eval_recurrence(f5, 10, f5.from_int(3)));
    for (uint64_t n = 0; n <= 20; ++n) {
        for (uint64_t xi = 0; xi < 5; ++xi) {
            const FieldElem x = f5.element_at(xi);
            EXPECT_EQ(dickson::frobenius_lift(f5, n, 2, x),
                      dickson::eval_recurrence(f5, 25 * n, x));
        }
    }
}

TEST(JacobsthalTest, SmallPolynomialsAndSubstitution)
{
    const Field f7 = Field::make(7, 1);
    for (uint64_t xi = 0; xi < 7; ++xi) {
        const FieldElem x = f7.element_at(xi);
        EXPECT_TRUE(f7.is_one(dickson::jacobsthal(f7, 2, x)));  // J_2 = 1
        // J_3 = 1 + 2x, so the substitution gives 1 - x = F_3(1, x).
        EXPECT_EQ(dickson::jacobsthal_substitution(f7, 3, x),
                  f7.sub(f7.one(), x));
    }
    // J_5(-2/2) = J_5(6) = 6 = F_5(1, 2).
    EXPECT_EQ(dickson::jacobsthal(f7, 5, f7.from_int(6)), f7.from_int(6));
    EXPECT_EQ(dickson::jacobsthal_substitution(f7, 5, f7.from_int(2)),
              f7.from_int(6));
}

TEST(KnownValueTest, PeriodSixAtOne)
{
    const Field f5 = Field::make(5, 1);
    const auto series = dickson::recurrence_series(f5, 11, f5.one());
    const std::vector<uint64_t> expected{0, 1, 1, 0, 4, 4, 0, 1, 1, 0, 4, 4};
    for (uint64_t n = 0; n <= 11; ++n) {
        EXPECT_EQ(series[n], f5.from_int(expected[n]));
    }
}

TEST(PeriodicityTest, IndicesCongruentModQSquaredMinusOne)
{
    const Field f5 = Field::make(5, 1);
    const FieldElem quarter = f5.inv(f5.from_int(4));
    for (uint64_t xi = 0; xi < 5; ++xi) {
        const FieldElem x = f5.element_at(xi);
        if (x == quarter) continue;
        for (uint64_t n = 1; n <= 24; ++n) {
            EXPECT_EQ(dickson::eval_recurrence(f5, n, x),
                      dickson::eval_recurrence(f5, n + 24, x));
        }
    }
}

TEST(CharTwoTest, EvaluatorsRejectEvenCharacteristic)
{
    const Field f2 = Field::make(2, 1);
    const Field f4 = Field::make(2, 2);
    EXPECT_THROW(dickson::eval_recurrence(f2, 3, f2.one()),
                 dickson::CharacteristicTwoError);
    EXPECT_THROW(dickson::odd_binomial_poly(f4, 3),
                 dickson::CharacteristicTwoError);
    EXPECT_THROW(dickson::quarter_point_value(f2, 3),
                 dickson::CharacteristicTwoError);
    EXPECT_THROW(dickson::jacobsthal_substitution(f2, 3, f2.one()),
                 dickson::CharacteristicTwoError);
    EXPECT_THROW(dickson::frobenius_lift(f2, 3, 1, f2.one()),
                 dickson::CharacteristicTwoError);
}

TEST(FrobeniusLiftTest, RejectsOverflowAndZeroPower)
{
    const Field f3 = Field::make(3, 1);
    EXPECT_THROW(dickson::frobenius_lift(f3, 1, 0, f3.one()),
                 std::invalid_argument);
    EXPECT_THROW(dickson::frobenius_lift(f3, UINT64_MAX / 2, 2, f3.one()),
                 std::invalid_argument);
}

}  // namespace

#include "dickson/polynomial.hpp"

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

TEST(PolynomialTest, MulExample)
{
    const Field f7 = Field::make(7, 1);
    const DensePoly a = poly_from_ints(f7, {1, 1});   // 1 + x
    const DensePoly b = poly_from_ints(f7, {1, 6});   // 1 - x
    EXPECT_EQ(a * b, poly_from_ints(f7, {1, 0, 6}));  // 1 - x^2
}

TEST(PolynomialTest, EvalExample)
{
    const Field f7 = Field::make(7, 1);
    const DensePoly p = poly_from_ints(f7, {1, 5});  // 1 - 2x
    EXPECT_EQ(p.eval(f7.from_int(3)), f7.from_int(2));
}

TEST(PolynomialTest, ModReductionExamples)
{
    const Field f3 = Field::make(3, 1);
    const DensePoly cube = DensePoly::monomial(f3, f3.one(), 3);
    EXPECT_EQ(cube.mod_xq_minus_x(3), DensePoly::monomial(f3, f3.one(), 1));

    // x^q -> x, x^(q+1) -> x^2, constants unchanged.
    const DensePoly c = DensePoly::constant(f3, f3.from_int(2));
    EXPECT_EQ(c.mod_xq_minus_x(3), c);
    const DensePoly q_plus_1 = DensePoly::monomial(f3, f3.one(), 4);
    EXPECT_EQ(q_plus_1.mod_xq_minus_x(3),
              DensePoly::monomial(f3, f3.one(), 2));
}

TEST(PolynomialTest, ModReductionPreservesValues)
{
    for (const uint64_t q : {3u, 5u, 9u}) {
        const Field f = dickson::field_from_order(q);
        for (uint64_t seed = 1; seed <= 5; ++seed) {
            std::vector<FieldElem> coeffs;
            for (uint64_t i = 0; i <= 2 * q; ++i) {
                coeffs.push_back(f.element_at((3 * i + seed * seed) % q));
            }
            const DensePoly poly = DensePoly::from_coeffs(f, coeffs);
            const DensePoly reduced = poly.mod_xq_minus_x(q);
            EXPECT_LT(reduced.degree(), static_cast<int64_t>(q));
            for (uint64_t i = 0; i < q; ++i) {
                const FieldElem x = f.element_at(i);
                EXPECT_EQ(poly.eval(x), reduced.eval(x));
            }
        }
    }
}

TEST(PolynomialTest, NormalizationAndDegree)
{
    const Field f5 = Field::make(5, 1);
    EXPECT_EQ(poly_from_ints(f5, {1, 2, 0, 0}).degree(), 1);
    EXPECT_TRUE(poly_from_ints(f5, {0, 0}).is_zero());
    EXPECT_EQ(DensePoly::zero(f5).degree(), -1);
    EXPECT_EQ(DensePoly::zero(f5) * poly_from_ints(f5, {1, 2}),
              DensePoly::zero(f5));
}

TEST(PolynomialTest, PowMatchesRepeatedMul)
{
    const Field f5 = Field::make(5, 1);
    const DensePoly base = poly_from_ints(f5, {1, 4});  // 1 - x
    DensePoly acc = DensePoly::one(f5);
    for (uint64_t n = 0; n <= 8; ++n) {
        EXPECT_EQ(base.pow(n), acc);
        acc = acc * base;
    }
}

TEST(PolynomialTest, FieldMismatchThrows)
{
    const DensePoly a = DensePoly::one(Field::make(3, 1));
    const DensePoly b = DensePoly::one(Field::make(5, 1));
    EXPECT_THROW(a * b, std::invalid_argument);
    EXPECT_THROW(a + b, std::invalid_argument);
}

}  // namespace

#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "bsphere/symmetric_poly.hpp"
#include "oracles.hpp"
#include "printers.hpp"

namespace bsphere {
namespace {

std::vector<std::uint64_t> degrees_of(const SymmetricPoly& p) { return {p.support().begin(), p.support().end()}; }

oracle::MonomialSet monomials_of(const SymmetricPoly& p, unsigned n) {
    return oracle::esf_sum(degrees_of(p), p.constant(), n);
}

// phi_3, phi_5 and phi_7 as periodic windows.
const SymmetricPoly kPhi3 = SymmetricPoly::periodic(false, 4, {3, 4});
const SymmetricPoly kPhi5 = SymmetricPoly::periodic(false, 8, {5, 6, 7, 8});
const SymmetricPoly kPhi7 = SymmetricPoly::periodic(false, 8, {7, 8});

TEST(SymmetricPoly, FiniteCancelsRepeatedDegrees) {
    const auto p = SymmetricPoly::finite(false, {3, 1, 3, 3, 2, 2});
    EXPECT_EQ(degrees_of(p), (std::vector<std::uint64_t>{1, 3}));
    EXPECT_THROW(SymmetricPoly::finite(false, {0}), std::invalid_argument);
    EXPECT_THROW(SymmetricPoly::periodic(false, 6, {1}), std::invalid_argument);
    EXPECT_THROW(SymmetricPoly::periodic(false, 4, {5}), std::invalid_argument);
}

TEST(SymmetricPoly, PeriodicCoefficients) {
    EXPECT_TRUE(kPhi7.coefficient(7));
    EXPECT_TRUE(kPhi7.coefficient(16));
    EXPECT_TRUE(kPhi7.coefficient(15));
    EXPECT_FALSE(kPhi7.coefficient(9));
    EXPECT_FALSE(kPhi7.coefficient(0));
}

TEST(PolyMul, Examples) {
    const auto p = SymmetricPoly::finite(false, {1, 2});
    const auto q = SymmetricPoly::sigma(2);
    const auto prod = poly_mul(p, q);
    EXPECT_EQ(prod, SymmetricPoly::finite(false, {2, 3}));
    // Cross-check at the monomial level in four variables.
    EXPECT_EQ(oracle::multiply(monomials_of(p, 4), monomials_of(q, 4)), monomials_of(prod, 4));

    EXPECT_EQ(p * SymmetricPoly::one(), p);
    EXPECT_EQ(SymmetricPoly::sigma(1) * SymmetricPoly::sigma(1), SymmetricPoly::sigma(1));
    EXPECT_EQ(p * SymmetricPoly::zero(), SymmetricPoly::zero());
}

TEST(PolyMul, RejectsPeriodicOperands) {
    EXPECT_THROW(poly_mul(kPhi3, SymmetricPoly::sigma(1)), std::invalid_argument);
    EXPECT_THROW(poly_mul(SymmetricPoly::one(), kPhi5), std::invalid_argument);
}

TEST(PolyMul, EsfProductLawSmall) {
    for (unsigned n = 0; n <= 7; ++n)
        for (Degree i = 1; i <= 16; ++i)
            for (Degree j = 1; j <= 16; ++j) {
                const auto lhs = oracle::multiply(oracle::esf_sum({i}, false, n), oracle::esf_sum({j}, false, n));
                EXPECT_EQ(lhs, oracle::esf_sum({sigma_mul(i, j)}, false, n)) << n << " " << i << " " << j;
            }
}

TEST(PolyMul, AgreesWithMonomialBruteForce) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Degree> deg(1, 16);
    std::uniform_int_distribution<int> len(0, 16), coin(0, 1);
    for (int trial = 0; trial < 150; ++trial) {
        std::vector<Degree> a(len(rng)), b(len(rng));
        for (auto& d : a) d = deg(rng);
        for (auto& d : b) d = deg(rng);
        const auto p = SymmetricPoly::finite(coin(rng), a);
        const auto q = SymmetricPoly::finite(coin(rng), b);
        const unsigned n = static_cast<unsigned>(trial % 9);
        const auto prod = poly_mul(p, q);
        EXPECT_EQ(oracle::multiply(monomials_of(p, n), monomials_of(q, n)), monomials_of(prod, n)) << trial;
    }
}

TEST(EvalAtWeight, Examples) {
    EXPECT_TRUE(eval_at_weight(kPhi5, 6));
    EXPECT_FALSE(eval_at_weight(SymmetricPoly::sigma(3), 2));
    EXPECT_TRUE(eval_at_weight(kPhi7, 9));
}

TEST(EvalAtWeight, MatchesDenseEvaluation) {
    // Random finite polynomials, evaluated on every point of n <= 8 variables.
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<Degree> deg(1, 9);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Degree> d(trial % 6);
        for (auto& x : d) x = deg(rng);
        const auto p = SymmetricPoly::finite(trial % 2 == 0, d);
        const unsigned n = 8;
        const auto f = monomials_of(p, n);
        for (std::uint32_t point = 0; point < (1u << n); ++point)
            ASSERT_EQ(eval_at_weight(p, static_cast<Degree>(std::popcount(point))), oracle::eval(f, point));
    }
}

TEST(EvalAtWeight, BothPeriodicWalksAgree) {
    // Weights with few ones take the submask walk, others the support walk.
    for (Degree w = 0; w < 600; ++w) {
        bool direct = false;
        for (Degree i = 1; i <= w; ++i) direct ^= kPhi5.coefficient(i) && binom_parity(w, i);
        EXPECT_EQ(eval_at_weight(kPhi5, w), direct) << w;
    }
}

TEST(Restrict, Examples) {
    EXPECT_EQ(restrict_to(kPhi3, 5), SymmetricPoly::finite(false, {3, 4}));
    EXPECT_EQ(restrict_to(SymmetricPoly::periodic(false, 1, {1}), 2), SymmetricPoly::finite(false, {1, 2}));
    EXPECT_TRUE(restrict_to(kPhi7, 6).is_zero());
    EXPECT_EQ(restrict_to(kPhi7, 16), SymmetricPoly::finite(false, {7, 8, 15, 16}));
    EXPECT_EQ(restrict_to(SymmetricPoly::finite(true, {2, 9}), 4), SymmetricPoly::finite(true, {2}));
}

TEST(Restrict, NoDegreeAboveNAndEvaluationPreserved) {
    for (const auto& p : {kPhi3, kPhi5, kPhi7, SymmetricPoly::periodic(true, 16, {2, 9, 16})}) {
        for (Degree n = 0; n <= 40; ++n) {
            const auto r = restrict_to(p, n);
            EXPECT_FALSE(r.is_periodic());
            for (Degree d : r.support()) EXPECT_LE(d, n);
            for (Degree w = 0; w <= n; ++w) EXPECT_EQ(eval_at_weight(r, w), eval_at_weight(p, w));
        }
    }
}

TEST(PolyAdd, PeriodicUsesLargerPeriod) {
    const auto sum = poly_add(kPhi3, kPhi5);
    EXPECT_EQ(sum.period(), 8u);
    // {3,4,7,8} xor {5,6,7,8}
    EXPECT_EQ(degrees_of(sum), (std::vector<std::uint64_t>{3, 4, 5, 6}));
    EXPECT_THROW(poly_add(kPhi3, SymmetricPoly::one()), std::invalid_argument);
}

TEST(FromPowerBasis, Examples) {
    const std::vector<std::uint64_t> y0y1 = {0b11};
    EXPECT_EQ(from_power_basis(y0y1), SymmetricPoly::sigma(3));
    const std::vector<std::uint64_t> y2 = {0b100};
    EXPECT_EQ(from_power_basis(y2), SymmetricPoly::sigma(4));
    const std::vector<std::uint64_t> f = {0b1, 0b101};
    const auto p = from_power_basis(f);
    EXPECT_EQ(p, SymmetricPoly::finite(false, {1, 5}));
    // y0 + y0*y2 = sigma_1 + sigma_1 * sigma_4 in six variables.
    const auto s1 = oracle::esf(1, 6), s4 = oracle::esf(4, 6);
    auto expected = oracle::multiply(s1, s4);
    for (auto m : s1) oracle::toggle(expected, m);
    EXPECT_EQ(monomials_of(p, 6), expected);
    const std::vector<std::uint64_t> one = {0};
    EXPECT_EQ(from_power_basis(one), SymmetricPoly::one());
}

TEST(Periodicity, SigmaValueRepeatsEveryPowerOfTwo) {
    for (unsigned s = 0; s <= 6; ++s) {
        const Degree top = Degree{1} << s;
        for (Degree i = top / 2 + 1; i < top; ++i)
            for (Degree j = i; j <= top; ++j)
                for (Degree m = top; m <= 8 * top; m += top)
                    EXPECT_EQ(eval_at_weight(SymmetricPoly::sigma(i), j), eval_at_weight(SymmetricPoly::sigma(i), j + m));
    }
}

TEST(Periodicity, TopDegreeNeedsTwiceThePeriod) {
    // i = j = 2^s: C(2^s, 2^s) is odd but C(2^(s+1), 2^s) is even.
    for (unsigned s = 0; s <= 10; ++s) {
        const Degree top = Degree{1} << s;
        EXPECT_TRUE(eval_at_weight(SymmetricPoly::sigma(top), top));
        EXPECT_FALSE(eval_at_weight(SymmetricPoly::sigma(top), 2 * top));
        EXPECT_TRUE(eval_at_weight(SymmetricPoly::sigma(top), 3 * top));
    }
}

}  // namespace
}  // namespace bsphere

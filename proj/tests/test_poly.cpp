/*
   Copyright 2026 The polydet Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "polydet/matrix.hpp"
#include "polydet/poly.hpp"
#include "support.hpp"

using namespace polydet;
using polydet::testing::Q;
using polydet::testing::Qs;

namespace {
const RationalField kQ;
}

TEST(EvalHomogeneous, Examples) {
    EXPECT_EQ(eval_homogeneous(HomogeneousPoly(kQ, Qs({1, 2, 1})), Q(1), Q(1)), Q(4));
    // x^3 + x y^2 + y^3 at (2, 1): 8 + 2 + 1
    EXPECT_EQ(eval_homogeneous(HomogeneousPoly(kQ, Qs({1, 0, 1, 1})), Q(2), Q(1)), Q(11));
    EXPECT_EQ(eval_homogeneous(HomogeneousPoly(kQ, Qs({0, 0, 0})), Q(5, 3), Q(-7)), Q(0));
    EXPECT_EQ(eval_homogeneous(HomogeneousPoly(kQ, Qs({4})), Q(5, 3), Q(-7)), Q(4));
}

TEST(EvalHomogeneous, MatchesTermByTermSum) {
    Xoshiro256 rng(21);
    for (int t = 0; t < 200; ++t) {
        const std::size_t k = rng.uniform_below(7);
        const auto p = polydet::testing::random_poly(kQ, k, rng);
        const auto x = polydet::testing::random_scalar(kQ, rng);
        const auto y = polydet::testing::random_scalar(kQ, rng);
        Rational expect;
        for (std::size_t i = 0; i <= k; ++i)
            expect += p[i] * polydet::testing::naive_pow(kQ, x, k - i) * polydet::testing::naive_pow(kQ, y, i);
        EXPECT_EQ(eval_homogeneous(p, x, y), expect);
    }
}

TEST(EvalHomogeneous, Homogeneity) {
    Xoshiro256 rng(22);
    for (int t = 0; t < 200; ++t) {
        const std::size_t k = rng.uniform_below(6);
        const auto p = polydet::testing::random_poly(kQ, k, rng);
        const auto x = polydet::testing::random_scalar(kQ, rng);
        const auto y = polydet::testing::random_scalar(kQ, rng);
        const auto s = polydet::testing::random_scalar(kQ, rng);
        EXPECT_EQ(eval_homogeneous(p, s * x, s * y), polydet::testing::naive_pow(kQ, s, k) * eval_homogeneous(p, x, y));
    }
}

TEST(EvalHomogeneous, DomainMismatch) {
    const PrimeField f7(7), f11(11);
    const HomogeneousPoly<PrimeField> p(f7, {f7.one(), f7.one()});
    EXPECT_THROW((void)eval_homogeneous(p, f11.one(), f11.one()), Error);
}

TEST(NamedPolys, Constructors) {
    EXPECT_EQ(sum_power_poly(kQ, 3).coeffs(), Qs({1, 3, 3, 1}));
    EXPECT_EQ(sum_power_poly(kQ, 0).coeffs(), Qs({1}));
    EXPECT_EQ(alternating_poly(kQ, 2).coeffs(), Qs({1, -1, 1}));
    EXPECT_EQ(alternating_poly(kQ, 3).coeffs(), Qs({1, -1, 1, -1}));
    EXPECT_EQ(all_ones_poly(kQ, 2).coeffs(), Qs({1, 1, 1}));
}

TEST(NamedPolys, SumPowerEvaluatesToBinomialPower) {
    Xoshiro256 rng(23);
    for (std::size_t k = 0; k <= 8; ++k)
        for (int t = 0; t < 20; ++t) {
            const auto x = polydet::testing::random_scalar(kQ, rng);
            const auto y = polydet::testing::random_scalar(kQ, rng);
            EXPECT_EQ(eval_homogeneous(sum_power_poly(kQ, k), x, y), polydet::testing::naive_pow(kQ, x + y, k));
        }
}

TEST(Support, Examples) {
    EXPECT_EQ(support(HomogeneousPoly(kQ, Qs({1, 0, 1, 1}))), (std::vector<std::size_t>{0, 2, 3}));
    EXPECT_EQ(support(HomogeneousPoly(kQ, Qs({0, 1, 0, 0}))), (std::vector<std::size_t>{1}));
    EXPECT_TRUE(support(HomogeneousPoly(kQ, Qs({0, 0}))).empty());
}

TEST(HomogeneousPoly, NeedsAtLeastOneCoefficient) {
    EXPECT_THROW(HomogeneousPoly<RationalField>(kQ, {}), Error);
}

TEST(UnivariatePoly, DegreeIgnoresTrailingZeros) {
    const UnivariatePoly<RationalField> f(kQ, Qs({1, 2, 0, 0}));
    EXPECT_EQ(f.degree(), 1U);
    EXPECT_EQ(f.leading(), Q(2));
    EXPECT_FALSE(f.is_zero());
    EXPECT_TRUE(UnivariatePoly<RationalField>(kQ, Qs({0, 0})).is_zero());
    EXPECT_EQ(f(Q(3)), Q(7));
}

TEST(ExpandSumForm, Examples) {
    const auto grid1 = expand_sum_form(UnivariatePoly(kQ, Qs({0, 0, 1})), 3);
    EXPECT_EQ(grid1, DenseMatrix(kQ, 3, 3, Qs({0, 0, 1, 0, 2, 0, 1, 0, 0})));
    const auto grid2 = expand_sum_form(UnivariatePoly(kQ, Qs({1})), 2);
    EXPECT_EQ(grid2, DenseMatrix(kQ, 2, 2, Qs({1, 0, 0, 0})));
    const auto grid3 = expand_sum_form(UnivariatePoly(kQ, Qs({0, 1})), 2);
    EXPECT_EQ(grid3, DenseMatrix(kQ, 2, 2, Qs({0, 1, 1, 0})));
    EXPECT_THROW(expand_sum_form(UnivariatePoly(kQ, Qs({1})), 0), Error);
}

TEST(ExpandSumForm, GridReproducesShiftedPolynomial) {
    Xoshiro256 rng(24);
    for (int t = 0; t < 100; ++t) {
        const std::size_t deg = rng.uniform_below(6);
        const UnivariatePoly<RationalField> f(kQ, polydet::testing::random_vector(kQ, deg + 1, rng));
        const std::size_t n = deg + 1 + rng.uniform_below(3);
        const auto grid = expand_sum_form(f, n);
        const auto a = polydet::testing::random_scalar(kQ, rng);
        const auto b = polydet::testing::random_scalar(kQ, rng);
        Rational sum;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                sum += grid(i, j) * polydet::testing::naive_pow(kQ, a, i) * polydet::testing::naive_pow(kQ, b, j);
        EXPECT_EQ(sum, f(a + b));
    }
}

TEST(CompleteHomogeneous, Examples) {
    EXPECT_EQ(complete_homogeneous(kQ, 0, Qs({5, 7})), Q(1));
    EXPECT_EQ(complete_homogeneous(kQ, 0, {}), Q(1));
    EXPECT_EQ(complete_homogeneous(kQ, -3, Qs({1, 2})), Q(0));
    EXPECT_EQ(complete_homogeneous(kQ, 2, Qs({0, 1})), Q(1));
    EXPECT_EQ(complete_homogeneous(kQ, 1, Qs({2, 3})), Q(5));
    EXPECT_EQ(complete_homogeneous(kQ, 3, {}), Q(0));
}

TEST(CompleteHomogeneous, MatchesMonomialEnumeration) {
    Xoshiro256 rng(25);
    for (int t = 0; t < 60; ++t) {
        const std::size_t len = rng.uniform_below(5);
        const auto xs = polydet::testing::random_vector(kQ, len, rng);
        for (long m = -1; m <= 4; ++m)
            EXPECT_EQ(complete_homogeneous(kQ, m, xs), polydet::testing::monomial_sum(kQ, m, xs)) << "m=" << m << " n=" << len;
    }
}

TEST(CompleteHomogeneous, TableMatchesPointwise) {
    const auto xs = Qs({2, -1, 3});
    const auto table = complete_homogeneous_table(kQ, xs, 5);
    for (long m = 0; m <= 5; ++m) EXPECT_EQ(table[static_cast<std::size_t>(m)], complete_homogeneous(kQ, m, xs));
}

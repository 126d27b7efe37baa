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

#include <cmath>
#include <sstream>

#include "polydet/ffprob.hpp"
#include "polydet/scalar.hpp"

using namespace polydet;

namespace {
Rational Q(long n, long d = 1) { return Rational(mpz_class(n), mpz_class(d)); }

ExperimentConfig cfg(std::uint64_t p, std::size_t n, std::vector<long long> c, std::uint64_t trials,
                     std::uint64_t seed) {
    ExperimentConfig out;
    out.modulus = p;
    out.n = n;
    out.coeffs = std::move(c);
    out.trials = trials;
    out.seed = seed;
    return out;
}

double as_double(const Rational& r) { return r.raw().get_d(); }

template <class Fn>
void expect_code(ErrorCode code, Fn&& fn) {
    try {
        fn();
        ADD_FAILURE() << "expected " << error_name(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

// Collision-free probability by counting injective tuples.
Rational collision_free(std::size_t n, std::uint64_t q) {
    mpz_class inj = 1, all = 1;
    for (std::size_t i = 0; i < n; ++i) {
        inj *= (q > i) ? mpz_class(static_cast<unsigned long>(q - i)) : mpz_class(0);
        all *= static_cast<unsigned long>(q);
    }
    return Rational(inj, all);
}
}  // namespace

TEST(SzBound, Examples) {
    EXPECT_EQ(sz_bound(3, 2, 101), Q(6, 101));
    EXPECT_EQ(sz_bound(4, 0, 101), Q(0));
    EXPECT_EQ(sz_bound(2, 3, 7), Q(6, 7));
    EXPECT_EQ(sz_bound(5, 4, 7), Q(20, 7));  // not clamped
}

TEST(ExactBorderline, Examples) {
    const auto d = Q(9900, 10201);
    EXPECT_EQ(exact_borderline_probability(3, 101), Q(1) - d * d);
    EXPECT_NEAR(as_double(exact_borderline_probability(3, 101)), 0.05814, 1e-5);
    EXPECT_EQ(exact_borderline_probability(1, 101), Q(0));
    EXPECT_EQ(exact_borderline_probability(4, 3), Q(1));
}

TEST(ExactBorderline, MatchesCollisionCounting) {
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 101ULL})
        for (std::size_t n = 1; n <= 6; ++n) {
            const auto free = collision_free(n, q);
            EXPECT_EQ(exact_borderline_probability(n, q), Q(1) - free * free) << n << " " << q;
        }
}

TEST(ExactBorderline, BruteForceOverSmallField) {
    // enumerate every (a, b) in F_5^2 x F_5^2 and count the zero determinants
    const PrimeField f(5);
    std::uint64_t zeros = 0, total = 0;
    for (std::uint64_t a0 = 0; a0 < 5; ++a0)
        for (std::uint64_t a1 = 0; a1 < 5; ++a1)
            for (std::uint64_t b0 = 0; b0 < 5; ++b0)
                for (std::uint64_t b1 = 0; b1 < 5; ++b1) {
                    // p = 1 + (x+y): entries 1 + a_r + b_s
                    auto e = [&](std::uint64_t a, std::uint64_t b) { return f.from_u64(1 + a + b); };
                    const auto det = e(a0, b0) * e(a1, b1) - e(a0, b1) * e(a1, b0);
                    zeros += det.is_zero() ? 1 : 0;
                    ++total;
                }
    EXPECT_EQ(Rational(mpz_class(static_cast<unsigned long>(zeros)), mpz_class(static_cast<unsigned long>(total))),
              exact_borderline_probability(2, 5));
}

TEST(ExactBorderline, BelowSchwartzZippel) {
    for (std::uint64_t q = 11; q <= 101; ++q) {
        if (!is_prime(q)) continue;
        for (std::size_t n = 2; n <= 5; ++n)
            EXPECT_LE(as_double(exact_borderline_probability(n, q)), as_double(sz_bound(n, n - 1, q)))
                << n << " " << q;
    }
}

TEST(Estimate, ConstantDeterminantNeverVanishes) {
    const auto r = estimate_zero_probability(cfg(2, 1, {1}, 1000, 3));
    EXPECT_EQ(r.zero_count, 0U);
    EXPECT_EQ(r.empirical, Q(0));
    EXPECT_EQ(r.k, 0U);
}

TEST(Estimate, Deterministic) {
    const auto c = cfg(101, 3, {1, 1, 1}, 5000, 42);
    const auto r1 = estimate_zero_probability(c);
    const auto r2 = estimate_zero_probability(c);
    EXPECT_EQ(r1, r2);
    EXPECT_EQ(r1.sz_bound, Q(6, 101));
    ASSERT_TRUE(r1.exact_borderline.has_value());
    EXPECT_EQ(r1.oracle_checked, 100U);
}

TEST(Estimate, SerialEqualsParallel) {
    for (const auto& c : {cfg(101, 3, {1, 1, 1}, 4000, 9), cfg(13, 2, {3, 1, 5, 2}, 1500, 10)}) {
        EXPECT_EQ(estimate_zero_probability(c, Execution::Serial), estimate_zero_probability(c, Execution::Parallel));
    }
}

TEST(Estimate, DifferentSeedsDiffer) {
    EXPECT_NE(estimate_zero_probability(cfg(11, 3, {1, 1, 1}, 3000, 1)).zero_count,
              estimate_zero_probability(cfg(11, 3, {1, 1, 1}, 3000, 2)).zero_count);
}

TEST(Estimate, InvalidConfigs) {
    expect_code(ErrorCode::NotPrime, [] { validate(cfg(4, 1, {1}, 10, 0)); });
    expect_code(ErrorCode::NotPrime, [] { validate(cfg(1, 1, {1}, 10, 0)); });
    expect_code(ErrorCode::InvalidConfig, [] { validate(cfg(7, 1, {1}, 0, 0)); });
    expect_code(ErrorCode::InvalidConfig, [] { validate(cfg(7, 0, {1}, 10, 0)); });
    expect_code(ErrorCode::InvalidConfig, [] { validate(cfg(7, 3, {1, 1}, 10, 0)); });
    expect_code(ErrorCode::InvalidConfig, [] { validate(cfg(7, 2, {1, 7}, 10, 0)); });
    expect_code(ErrorCode::InvalidConfig, [] { validate(cfg(7, 2, {}, 10, 0)); });
    expect_code(ErrorCode::InvalidConfig, [] { estimate_zero_probability(cfg(7, 1, {1}, 0, 0)); });
}

TEST(Estimate, MonteCarloConsistencyOverSeeds) {
    // a 3 sigma band holds in about 99.7% of runs; 500 seeds make ">= 99%" a real check
    const std::uint64_t seeds = 500, trials = 4000;
    std::uint64_t inside = 0;
    for (std::uint64_t seed = 0; seed < seeds; ++seed) {
        const auto r = estimate_zero_probability(cfg(11, 3, {1, 1, 1}, trials, seed));
        ASSERT_TRUE(r.exact_borderline.has_value());
        const double p = as_double(*r.exact_borderline);
        const double sigma3 = 3.0 * std::sqrt(p * (1 - p) / double(trials));
        EXPECT_NEAR(r.confidence_halfwidth, sigma3, 1e-12);
        inside += std::abs(as_double(r.empirical) - p) <= sigma3 ? 1 : 0;
    }
    EXPECT_GE(double(inside) / double(seeds), 0.99) << inside << "/" << seeds;
}

TEST(Estimate, BelowBoundPlusNoiseForSmallerN) {
    // n < k+1 runs through elimination on every trial
    for (const auto& c : {cfg(13, 2, {1, 2, 3, 4}, 2000, 5), cfg(17, 3, {5, 1, 1, 2, 9}, 1000, 6)}) {
        const auto r = estimate_zero_probability(c);
        EXPECT_FALSE(r.exact_borderline.has_value());
        const double bound = as_double(r.sz_bound);
        const double emp = as_double(r.empirical);
        const double slack = 3.0 * std::sqrt(std::min(bound, 1.0) * (1 - std::min(bound, 1.0)) / double(c.trials));
        EXPECT_LE(emp, bound + slack);
    }
}

TEST(Csv, Format) {
    EXPECT_EQ(csv_header(), "p,n,k,trials,seed,zero_count,empirical,sz_bound,exact_borderline");
    const auto r = estimate_zero_probability(cfg(2, 1, {1}, 10, 7));
    EXPECT_EQ(to_csv(r), "2,1,0,10,7,0,0,0,0");
}

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

#include "polydet/ffprob.hpp"

#include <cmath>
#include <stdexcept>

#include "polydet/det.hpp"
#include "polydet/rng.hpp"

namespace polydet {

namespace {

constexpr std::uint64_t kOracleSubsample = 100;

double to_double(const Rational& r) { return r.raw().get_d(); }

}  // namespace

void validate(const ExperimentConfig& cfg) {
    const PrimeField field(cfg.modulus);
    if (cfg.n == 0) throw Error(ErrorCode::InvalidConfig, "n must be >= 1");
    if (cfg.coeffs.empty()) throw Error(ErrorCode::InvalidConfig, "need at least one coefficient");
    if (cfg.n > cfg.degree() + 1)
        throw Error(ErrorCode::InvalidConfig, "n = " + std::to_string(cfg.n) + " exceeds k+1 = " +
                                                  std::to_string(cfg.degree() + 1));
    for (std::size_t i = 0; i < cfg.coeffs.size(); ++i)
        if (field.from_int(cfg.coeffs[i]).is_zero())
            throw Error(ErrorCode::InvalidConfig, "alpha_" + std::to_string(i) + " is zero mod p");
    if (cfg.trials == 0) throw Error(ErrorCode::InvalidConfig, "trials must be >= 1");
}

Rational sz_bound(std::size_t n, std::size_t k, std::uint64_t q) {
    if (q == 0) throw Error(ErrorCode::InvalidConfig, "field order must be positive");
    return Rational(mpz_class(std::to_string(n)) * mpz_class(std::to_string(k)), mpz_class(std::to_string(q)));
}

Rational exact_borderline_probability(std::size_t n, std::uint64_t q) {
    if (q == 0) throw Error(ErrorCode::InvalidConfig, "field order must be positive");
    if (n > q) return Rational(1L);
    const mpz_class Q(std::to_string(q));
    mpz_class num = 1, den = 1;
    for (std::size_t i = 0; i < n; ++i) {
        num *= Q - mpz_class(std::to_string(i));
        den *= Q;
    }
    const Rational collision_free(num, den);
    return Rational(1L) - collision_free * collision_free;
}

ExperimentResult estimate_zero_probability(const ExperimentConfig& cfg, Execution exec) {
    validate(cfg);
    const PrimeField field(cfg.modulus);
    std::vector<ModP> alphas;
    alphas.reserve(cfg.coeffs.size());
    for (auto c : cfg.coeffs) alphas.push_back(field.from_int(c));
    const UnivariatePoly<PrimeField> f(field, alphas);
    const std::size_t n = cfg.n;
    const std::size_t k = cfg.degree();
    const bool borderline = n == k + 1;

    std::uint64_t zeros = 0;
    std::uint64_t checked = 0;
    bool mismatch = false;
    const auto trials = static_cast<std::int64_t>(cfg.trials);
    const bool parallel = exec == Execution::Parallel;
#pragma omp parallel for schedule(static) reduction(+ : zeros, checked) reduction(|| : mismatch) if (parallel)
    for (std::int64_t t = 0; t < trials; ++t) {
        auto rng = Xoshiro256::for_stream(cfg.seed, static_cast<std::uint64_t>(t));
        std::vector<ModP> a(n), b(n);
        for (auto& x : a) x = ModP(rng.uniform_below(cfg.modulus), cfg.modulus);
        for (auto& x : b) x = ModP(rng.uniform_below(cfg.modulus), cfg.modulus);
        const PointVectors<PrimeField> pts(std::move(a), std::move(b));
        bool zero;
        if (borderline) {
            zero = det_sum_form(f, pts).value.is_zero();
            if (static_cast<std::uint64_t>(t) < kOracleSubsample) {
                const bool oracle_zero = bareiss_det(build_evaluation_matrix(f, pts), Execution::Serial).is_zero();
                mismatch = mismatch || (oracle_zero != zero);
                ++checked;
            }
        } else {
            zero = bareiss_det(build_evaluation_matrix(f, pts), Execution::Serial).is_zero();
        }
        if (zero) ++zeros;
    }
    if (mismatch) throw std::logic_error("closed-form zero test disagrees with elimination");

    ExperimentResult r;
    r.modulus = cfg.modulus;
    r.n = n;
    r.k = k;
    r.trials = cfg.trials;
    r.seed = cfg.seed;
    r.zero_count = zeros;
    r.empirical = Rational(mpz_class(std::to_string(zeros)), mpz_class(std::to_string(cfg.trials)));
    r.sz_bound = sz_bound(n, k, cfg.modulus);
    if (borderline) r.exact_borderline = exact_borderline_probability(n, cfg.modulus);
    r.oracle_checked = checked;
    const double prob = to_double(r.exact_borderline ? *r.exact_borderline : r.empirical);
    r.confidence_halfwidth = 3.0 * std::sqrt(prob * (1.0 - prob) / static_cast<double>(cfg.trials));
    return r;
}

std::string csv_header() { return "p,n,k,trials,seed,zero_count,empirical,sz_bound,exact_borderline"; }

std::string to_csv(const ExperimentResult& r) {
    return std::to_string(r.modulus) + "," + std::to_string(r.n) + "," + std::to_string(r.k) + "," +
           std::to_string(r.trials) + "," + std::to_string(r.seed) + "," + std::to_string(r.zero_count) + "," +
           r.empirical.to_string() + "," + r.sz_bound.to_string() + "," +
           (r.exact_borderline ? r.exact_borderline->to_string() : std::string());
}

}  // namespace polydet

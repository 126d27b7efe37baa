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

#ifndef POLYDET_FFPROB_HPP
#define POLYDET_FFPROB_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polydet/matrix.hpp"
#include "polydet/scalar.hpp"

namespace polydet {

/// Random-point experiment for p(x, y) = sum_i coeffs[i] (x + y)^i over F_p.
struct ExperimentConfig {
    std::uint64_t modulus = 0;
    std::size_t n = 0;
    std::vector<long long> coeffs;  ///< alpha_0..alpha_k, each nonzero mod p
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;

    std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

struct ExperimentResult {
    std::uint64_t modulus = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t zero_count = 0;
    Rational empirical;
    Rational sz_bound;
    std::optional<Rational> exact_borderline;
    /// 3 sigma normal half-width around the exact probability when known,
    /// else around the empirical rate.
    double confidence_halfwidth = 0.0;
    /// Trials whose fast zero test was cross-checked by elimination.
    std::uint64_t oracle_checked = 0;

    bool operator==(const ExperimentResult&) const = default;
};

/// Throws NOT_PRIME for a bad modulus and INVALID_CONFIG otherwise.
void validate(const ExperimentConfig& cfg);

/// nk/q, unclamped.
Rational sz_bound(std::size_t n, std::size_t k, std::uint64_t q);

/// 1 - D(n,q)^2 with D = prod_{i<n} (q-i)/q; 1 when n > q.
Rational exact_borderline_probability(std::size_t n, std::uint64_t q);

/// Each trial draws a, b uniformly from F_p^n on its own stream
/// Xoshiro256::for_stream(seed, trial). When n = k+1 the zero test is the
/// closed form, cross-checked against elimination on the first 100 trials;
/// otherwise every trial is eliminated. Results do not depend on `exec`.
ExperimentResult estimate_zero_probability(const ExperimentConfig& cfg, Execution exec = Execution::Parallel);

/// p,n,k,trials,seed,zero_count,empirical,sz_bound,exact_borderline
std::string csv_header();
std::string to_csv(const ExperimentResult& r);

}  // namespace polydet

#endif

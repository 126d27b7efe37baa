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

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "polydet/matrix.hpp"

namespace polydet {

namespace {

// below this many trailing rows the parallel region costs more than it saves
constexpr std::ptrdiff_t kParallelRows = 24;

std::uint64_t inv_mod(std::uint64_t v, std::uint64_t p) { return ModP(v, p).inverse().value(); }

}  // namespace

mpz_class bareiss_det_integer(std::vector<mpz_class> m, std::size_t n, Execution exec) {
    if (m.size() != n * n) throw Error(ErrorCode::NotSquare, "entry count is not n*n");
    if (n == 0) return 1;
    const auto N = static_cast<std::ptrdiff_t>(n);
    const bool parallel = exec == Execution::Parallel;
    int sign = 1;
    mpz_class prev = 1;
    for (std::ptrdiff_t k = 0; k + 1 < N; ++k) {
        if (m[k * N + k] == 0) {
            std::ptrdiff_t pivot = k + 1;
            while (pivot < N && m[pivot * N + k] == 0) ++pivot;
            if (pivot == N) return 0;
            for (std::ptrdiff_t j = k; j < N; ++j) std::swap(m[k * N + j], m[pivot * N + j]);
            sign = -sign;
        }
        const mpz_class& piv = m[k * N + k];
#pragma omp parallel for schedule(static) if (parallel && N - k > kParallelRows)
        for (std::ptrdiff_t i = k + 1; i < N; ++i) {
            mpz_class t;
            const mpz_class& lead = m[i * N + k];
            for (std::ptrdiff_t j = k + 1; j < N; ++j) {
                mpz_class& x = m[i * N + j];
                x *= piv;
                t = lead * m[k * N + j];
                x -= t;
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = piv;
    }
    mpz_class out = m[(N - 1) * N + (N - 1)];
    if (sign < 0) out = -out;
    return out;
}

ModP gauss_det_mod(std::vector<ModP> entries, std::size_t n, std::uint64_t p, Execution exec) {
    if (entries.size() != n * n) throw Error(ErrorCode::NotSquare, "entry count is not n*n");
    std::vector<std::uint64_t> m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].modulus() != p)
            throw Error(ErrorCode::DomainMismatch, "entry not in F_" + std::to_string(p));
        m[i] = entries[i].value();
    }
    const auto N = static_cast<std::ptrdiff_t>(n);
    const bool parallel = exec == Execution::Parallel;
    std::uint64_t det = 1 % p;
    for (std::ptrdiff_t k = 0; k < N; ++k) {
        std::ptrdiff_t pivot = k;
        while (pivot < N && m[pivot * N + k] == 0) ++pivot;
        if (pivot == N) return ModP(0, p);
        if (pivot != k) {
            for (std::ptrdiff_t j = k; j < N; ++j) std::swap(m[k * N + j], m[pivot * N + j]);
            det = det == 0 ? 0 : p - det;
        }
        const std::uint64_t piv = m[k * N + k];
        det = static_cast<std::uint64_t>(static_cast<unsigned __int128>(det) * piv % p);
        const std::uint64_t inv = inv_mod(piv, p);
#pragma omp parallel for schedule(static) if (parallel && N - k > kParallelRows)
        for (std::ptrdiff_t i = k + 1; i < N; ++i) {
            const std::uint64_t lead = m[i * N + k];
            if (lead == 0) continue;
            const auto factor = static_cast<std::uint64_t>(static_cast<unsigned __int128>(lead) * inv % p);
            const std::uint64_t neg = p - factor;
            for (std::ptrdiff_t j = k + 1; j < N; ++j) {
                const auto prod = static_cast<unsigned __int128>(neg) * m[k * N + j] + m[i * N + j];
                m[i * N + j] = static_cast<std::uint64_t>(prod % p);
            }
        }
    }
    return ModP(det, p);
}

Rational bareiss_det(const DenseMatrix<RationalField>& m, Execution exec) {
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    const std::size_t n = m.rows();
    if (n <= 3) return det_cofactor(m);
    std::vector<mpz_class> lifted(n * n);
    mpz_class scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        mpz_class row_lcm = 1;
        for (std::size_t c = 0; c < n; ++c) {
            const auto& den = m(r, c).raw().get_den();
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t c = 0; c < n; ++c) {
            const auto& q = m(r, c).raw();
            lifted[r * n + c] = q.get_num() * (row_lcm / q.get_den());
        }
        scale *= row_lcm;
    }
    return Rational(bareiss_det_integer(std::move(lifted), n, exec), scale);
}

ModP bareiss_det(const DenseMatrix<PrimeField>& m, Execution exec) {
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    if (m.rows() <= 3) return det_cofactor(m);
    return gauss_det_mod(m.entries(), m.rows(), m.field().modulus(), exec);
}

}  // namespace polydet

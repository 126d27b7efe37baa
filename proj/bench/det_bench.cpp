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

// Serial vs OpenMP elimination on borderline evaluation matrices, with the
// closed form as the structured baseline.

#include <benchmark/benchmark.h>

#include "polydet/det.hpp"
#include "polydet/rng.hpp"

namespace {

using namespace polydet;

const PrimeField kField(2147483647);

struct Fixture {
    HomogeneousPoly<PrimeField> p;
    PointVectors<PrimeField> pts;
    DenseMatrix<PrimeField> a;
};

Fixture make(std::size_t n) {
    Xoshiro256 rng(n);
    std::vector<ModP> c, xa, xb;
    for (std::size_t i = 0; i < n; ++i) {
        c.push_back(kField.from_u64(1 + rng.uniform_below(kField.modulus() - 1)));
        xa.push_back(kField.from_u64(rng.uniform_below(kField.modulus())));
        xb.push_back(kField.from_u64(rng.uniform_below(kField.modulus())));
    }
    HomogeneousPoly<PrimeField> p(kField, c);
    PointVectors<PrimeField> pts(xa, xb);
    auto a = build_evaluation_matrix(p, pts);
    return {std::move(p), std::move(pts), std::move(a)};
}

void BM_EliminationSerial(benchmark::State& state) {
    const auto fx = make(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(bareiss_det(fx.a, Execution::Serial));
}

void BM_EliminationParallel(benchmark::State& state) {
    const auto fx = make(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(bareiss_det(fx.a, Execution::Parallel));
}

void BM_Borderline(benchmark::State& state) {
    const auto fx = make(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(det_borderline(fx.p, fx.pts).value);
}

void BM_CauchyBinet(benchmark::State& state) {
    auto fx = make(12);
    const PointVectors<PrimeField> pts(
        std::vector<ModP>(fx.pts.a.begin(), fx.pts.a.begin() + state.range(0)),
        std::vector<ModP>(fx.pts.b.begin(), fx.pts.b.begin() + state.range(0)));
    const auto exec = state.range(1) ? Execution::Parallel : Execution::Serial;
    for (auto _ : state) benchmark::DoNotOptimize(det_cauchy_binet(fx.p, pts, MinorMode::HRoute, exec).value);
}

}  // namespace

BENCHMARK(BM_EliminationSerial)->Arg(50)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_EliminationParallel)->Arg(50)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Borderline)->Arg(50)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CauchyBinet)->Args({4, 0})->Args({4, 1})->Args({6, 0})->Args({6, 1})->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();

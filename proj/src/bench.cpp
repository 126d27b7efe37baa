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

#include "polydet/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <ostream>
#include <set>

#include "polydet/det.hpp"
#include "polydet/rng.hpp"

namespace polydet {

namespace {

template <class Fn>
std::int64_t median_ns(unsigned reps, Fn&& fn) {
    std::vector<std::int64_t> times;
    times.reserve(reps);
    for (unsigned i = 0; i < std::max(reps, 1U); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

ModP random_nonzero(const PrimeField& field, Xoshiro256& rng) {
    return ModP(1 + rng.uniform_below(field.modulus() - 1), field.modulus());
}

Rational random_nonzero(const RationalField&, Xoshiro256& rng) {
    while (true) {
        const auto num = rng.uniform_int(-9, 9);
        if (num != 0) return Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(rng.uniform_int(1, 4))));
    }
}

std::vector<ModP> distinct_points(const PrimeField& field, std::size_t n, Xoshiro256& rng) {
    std::set<std::uint64_t> seen;
    std::vector<ModP> out;
    while (out.size() < n) {
        const auto v = rng.uniform_below(field.modulus());
        if (seen.insert(v).second) out.emplace_back(v, field.modulus());
    }
    return out;
}

std::vector<Rational> distinct_points(const RationalField&, std::size_t n, Xoshiro256& rng) {
    std::set<std::string> seen;
    std::vector<Rational> out;
    const auto span = static_cast<long long>(4 * n + 4);
    while (out.size() < n) {
        Rational x(mpz_class(static_cast<long>(rng.uniform_int(-span, span))),
                   mpz_class(static_cast<long>(rng.uniform_int(1, 3))));
        if (seen.insert(x.to_string()).second) out.push_back(std::move(x));
    }
    return out;
}

template <ExactField F>
void bench_one(const F& field, std::size_t n, const BenchConfig& cfg, std::vector<BenchRecord>& out) {
    auto rng = Xoshiro256::for_stream(cfg.seed, n);
    const std::size_t k = n - 1;
    std::vector<scalar_t<F>> coeffs;
    for (std::size_t i = 0; i <= k; ++i) coeffs.push_back(random_nonzero(field, rng));
    const HomogeneousPoly<F> p(field, std::move(coeffs));
    auto a = distinct_points(field, n, rng);
    auto b = distinct_points(field, n, rng);
    const PointVectors<F> pts(std::move(a), std::move(b));
    const auto A = build_evaluation_matrix(p, pts);

    scalar_t<F> v_border, v_oracle, v_serial;
    const auto t_border = median_ns(cfg.repetitions, [&] { v_border = det_borderline(p, pts).value; });
    const auto t_oracle = median_ns(cfg.repetitions, [&] { v_oracle = bareiss_det(A, Execution::Parallel); });
    const auto t_serial = median_ns(cfg.repetitions, [&] { v_serial = bareiss_det(A, Execution::Serial); });

    const auto dom = cfg.domain.to_string();
    out.push_back({n, k, dom, "BORDERLINE", t_border, value_hash(v_border.to_string())});
    out.push_back({n, k, dom, "ORACLE", t_oracle, value_hash(v_oracle.to_string())});
    out.push_back({n, k, dom, "ORACLE_SERIAL", t_serial, value_hash(v_serial.to_string())});
}

}  // namespace

std::string value_hash(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
    std::vector<BenchRecord> out;
    for (auto n : cfg.sizes) {
        if (n == 0) throw Error(ErrorCode::InvalidConfig, "bench sizes must be >= 1");
        if (cfg.domain.kind == ScalarDomain::Kind::PrimeField) {
            const PrimeField field(cfg.domain.modulus);
            if (n > field.modulus()) throw Error(ErrorCode::InvalidConfig, "n exceeds p: no distinct points");
            bench_one(field, n, cfg, out);
        } else {
            bench_one(RationalField{}, n, cfg, out);
        }
    }
    return out;
}

bool write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& out, std::ostream& err) {
    std::map<std::size_t, std::string> first;
    bool ok = true;
    for (const auto& r : records) {
        auto [it, inserted] = first.emplace(r.n, r.value_hash);
        if (!inserted && it->second != r.value_hash) {
            err << "value hash mismatch at n=" << r.n << ": " << r.method << " " << r.value_hash << " vs "
                << it->second << "\n";
            ok = false;
        }
    }
    if (!ok) return false;
    out << "n,k,domain,method,wall_time_ns,value_hash\n";
    for (const auto& r : records)
        out << r.n << "," << r.k << "," << r.domain << "," << r.method << "," << r.wall_time_ns << ","
            << r.value_hash << "\n";
    return true;
}

}  // namespace polydet

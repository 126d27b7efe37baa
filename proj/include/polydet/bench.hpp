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

#ifndef POLYDET_BENCH_HPP
#define POLYDET_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "polydet/scalar.hpp"

namespace polydet {

struct BenchRecord {
    std::size_t n = 0;
    std::size_t k = 0;
    std::string domain;
    std::string method;  ///< BORDERLINE, ORACLE (parallel elimination), ORACLE_SERIAL
    std::int64_t wall_time_ns = 0;
    std::string value_hash;
};

struct BenchConfig {
    std::vector<std::size_t> sizes;
    ScalarDomain domain{ScalarDomain::Kind::PrimeField, 2147483647};
    unsigned repetitions = 5;
    std::uint64_t seed = 0;
};

/// 64-bit FNV-1a of the determinant's decimal string, as 16 hex digits.
std::string value_hash(std::string_view text);

/// For each n: random borderline instance (k = n-1, nonzero coefficients,
/// pairwise distinct nodes), median wall time of each method.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

/// Writes the CSV only if every method agrees on each n; otherwise writes
/// the offending hashes to `err` and returns false.
bool write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& out, std::ostream& err);

}  // namespace polydet

#endif

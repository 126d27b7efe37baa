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

#ifndef POLYDET_RNG_HPP
#define POLYDET_RNG_HPP

#include <array>
#include <cstdint>

namespace polydet {

/// SplitMix64 (Steele, Lea, Flood 2014). Used to expand seeds.
class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

   private:
    std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman, Vigna). State seeded from SplitMix64.
class Xoshiro256 {
   public:
    using result_type = std::uint64_t;

    explicit Xoshiro256(std::uint64_t seed) noexcept {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
    }

    /// Independent stream for trial `index` of a run seeded with `seed`:
    /// seeded with SplitMix64(seed ^ SplitMix64(index).next()).next().
    static Xoshiro256 for_stream(std::uint64_t seed, std::uint64_t index) noexcept {
        SplitMix64 idx(index);
        SplitMix64 mix(seed ^ idx.next());
        return Xoshiro256(mix.next());
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    result_type operator()() noexcept { return next(); }

    std::uint64_t next() noexcept {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in [0, bound) for 0 < bound <= 2^62: take the top 62 bits and
    /// reject draws at or above the largest multiple of bound.
    std::uint64_t uniform_below(std::uint64_t bound) noexcept {
        constexpr std::uint64_t range = std::uint64_t{1} << 62;
        const std::uint64_t limit = range - range % bound;
        while (true) {
            const std::uint64_t u = next() >> 2;
            if (u < limit) return u % bound;
        }
    }

    /// Uniform integer in [lo, hi].
    long long uniform_int(long long lo, long long hi) noexcept {
        return lo + static_cast<long long>(uniform_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

   private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> s_{};
};

}  // namespace polydet

#endif

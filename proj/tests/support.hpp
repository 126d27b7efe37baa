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

// Test-only oracles and generators. Nothing here calls the elimination or
// closed-form code paths it is used to check.

#ifndef POLYDET_TESTS_SUPPORT_HPP
#define POLYDET_TESTS_SUPPORT_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "polydet/matrix.hpp"
#include "polydet/poly.hpp"
#include "polydet/rng.hpp"

namespace polydet::testing {

/// Leibniz expansion: sum over permutations of sign * prod m(i, sigma(i)).
template <ExactField F>
scalar_t<F> leibniz_det(const DenseMatrix<F>& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    scalar_t<F> total = m.field().zero();
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        scalar_t<F> term = m.field().one();
        for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
        total = (inversions % 2 == 0) ? total + term : total - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Sum of all degree-m monomials in xs, by enumerating exponent vectors.
template <ExactField F>
scalar_t<F> monomial_sum(const F& field, long m, const std::vector<scalar_t<F>>& xs) {
    if (m < 0) return field.zero();
    if (m == 0) return field.one();
    scalar_t<F> total = field.zero();
    std::vector<long> e(xs.size(), 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
        if (i == xs.size()) {
            if (left != 0) return;
            scalar_t<F> mono = field.one();
            for (std::size_t j = 0; j < xs.size(); ++j)
                for (long r = 0; r < e[j]; ++r) mono *= xs[j];
            total += mono;
            return;
        }
        for (long c = 0; c <= left; ++c) {
            e[i] = c;
            rec(i + 1, left - c);
        }
        e[i] = 0;
    };
    rec(0, m);
    return total;
}

/// x^e by repeated multiplication.
template <ExactField F>
scalar_t<F> naive_pow(const F& field, const scalar_t<F>& x, std::size_t e) {
    scalar_t<F> acc = field.one();
    for (std::size_t i = 0; i < e; ++i) acc *= x;
    return acc;
}

/// Product of (x_j - x_i) over i < j, written out independently of the library.
template <ExactField F>
scalar_t<F> vdm(const F& field, const std::vector<scalar_t<F>>& xs) {
    scalar_t<F> acc = field.one();
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) acc *= xs[j] - xs[i];
    return acc;
}

inline Rational random_scalar(const RationalField&, Xoshiro256& rng) {
    return Rational(mpz_class(static_cast<long>(rng.uniform_int(-9, 9))),
                    mpz_class(static_cast<long>(rng.uniform_int(1, 4))));
}

inline ModP random_scalar(const PrimeField& field, Xoshiro256& rng) {
    return ModP(rng.uniform_below(field.modulus()), field.modulus());
}

template <ExactField F>
scalar_t<F> random_nonzero(const F& field, Xoshiro256& rng) {
    while (true) {
        auto x = random_scalar(field, rng);
        if (!x.is_zero()) return x;
    }
}

template <ExactField F>
std::vector<scalar_t<F>> random_vector(const F& field, std::size_t n, Xoshiro256& rng) {
    std::vector<scalar_t<F>> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(field, rng));
    return v;
}

/// Pairwise distinct entries.
template <ExactField F>
std::vector<scalar_t<F>> random_distinct(const F& field, std::size_t n, Xoshiro256& rng) {
    std::vector<scalar_t<F>> v;
    while (v.size() < n) {
        auto x = random_scalar(field, rng);
        if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(std::move(x));
    }
    return v;
}

template <ExactField F>
HomogeneousPoly<F> random_poly(const F& field, std::size_t k, Xoshiro256& rng) {
    return HomogeneousPoly<F>(field, random_vector(field, k + 1, rng));
}

template <ExactField F>
HomogeneousPoly<F> random_nonzero_poly(const F& field, std::size_t k, Xoshiro256& rng) {
    std::vector<scalar_t<F>> c;
    for (std::size_t i = 0; i <= k; ++i) c.push_back(random_nonzero(field, rng));
    return HomogeneousPoly<F>(field, std::move(c));
}

template <ExactField F>
PointVectors<F> random_points(const F& field, std::size_t n, Xoshiro256& rng) {
    auto a = random_vector(field, n, rng);
    auto b = random_vector(field, n, rng);
    return PointVectors<F>(std::move(a), std::move(b));
}

inline Rational Q(long num, long den = 1) { return Rational(mpz_class(num), mpz_class(den)); }

inline std::vector<Rational> Qs(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (auto x : xs) v.push_back(Q(x));
    return v;
}

}  // namespace polydet::testing

#endif

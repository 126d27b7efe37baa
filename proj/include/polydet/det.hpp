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

#ifndef POLYDET_DET_HPP
#define POLYDET_DET_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polydet/matrix.hpp"
#include "polydet/poly.hpp"

namespace polydet {

enum class DetMethod { VanishRank, Borderline, CauchyBinet, SumForm, Oracle };

/// How Cauchy-Binet minors are evaluated: by elimination on the selected
/// columns, or as Vandermonde product times a Jacobi-Trudi determinant.
enum class MinorMode { Direct, HRoute };

constexpr std::string_view method_name(DetMethod m) noexcept {
    switch (m) {
        case DetMethod::VanishRank: return "VANISH_RANK";
        case DetMethod::Borderline: return "BORDERLINE";
        case DetMethod::CauchyBinet: return "CAUCHY_BINET";
        case DetMethod::SumForm: return "SUM_FORM";
        case DetMethod::Oracle: return "ORACLE";
    }
    return "UNKNOWN";
}

constexpr std::string_view minor_mode_name(MinorMode m) noexcept {
    return m == MinorMode::Direct ? "DIRECT" : "H_ROUTE";
}

constexpr std::uint64_t choose2(std::uint64_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

template <ExactField F>
struct SubsetTerm {
    std::vector<std::size_t> subset;
    scalar_t<F> term;
};

/// Determinant with the factors that produced it.
///
/// BORDERLINE: value = sign_factor * coeff_product * vdm_a * vdm_b.
/// SUM_FORM: same shape, with coeff_product = lead^n * prod_i C(k, i).
/// CAUCHY_BINET: value = sum of subset_terms; the factor fields carry
/// prod alpha_i and the two Vandermonde products for reference.
/// VANISH_RANK / ORACLE: value only is authoritative.
template <ExactField F>
struct DetReport {
    scalar_t<F> value;
    DetMethod method;
    int sign_factor = 1;
    scalar_t<F> coeff_product;
    scalar_t<F> vdm_a;
    scalar_t<F> vdm_b;
    std::optional<MinorMode> minor_mode;
    std::vector<SubsetTerm<F>> subset_terms;
};

/// prod_{i<j} (x_j - x_i).
template <ExactField F>
scalar_t<F> vandermonde_product(const F& field, const std::vector<scalar_t<F>>& xs) {
    scalar_t<F> acc = field.one();
    for (std::size_t j = 1; j < xs.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) acc *= xs[j] - xs[i];
    return acc;
}

template <ExactField F>
scalar_t<F> coefficient_product(const HomogeneousPoly<F>& p) {
    scalar_t<F> acc = p.field().one();
    for (const auto& c : p.coeffs()) acc *= c;
    return acc;
}

/// Upper bound min(n, |support|, k+1) on rank A.
template <ExactField F>
std::size_t rank_upper_bound(const HomogeneousPoly<F>& p, std::size_t n) {
    return std::min({n, support(p).size(), p.degree() + 1});
}

template <ExactField F>
DetReport<F> det_borderline(const HomogeneousPoly<F>& p, const PointVectors<F>& pts) {
    const std::size_t k = p.degree();
    if (pts.size() != k + 1)
        throw Error(ErrorCode::SizeMismatch, "borderline formula needs n = k+1 = " + std::to_string(k + 1) +
                                                 ", got n = " + std::to_string(pts.size()));
    const auto& field = p.field();
    DetReport<F> rep{field.zero(), DetMethod::Borderline, (choose2(k + 1) % 2 == 0) ? 1 : -1,
                     coefficient_product(p), vandermonde_product(field, pts.a),
                     vandermonde_product(field, pts.b), std::nullopt, {}};
    rep.value = rep.coeff_product * rep.vdm_a * rep.vdm_b;
    if (rep.sign_factor < 0) rep.value = -rep.value;
    return rep;
}

namespace detail {

inline void check_exponents(const std::vector<long>& exps, std::size_t n) {
    if (exps.size() != n)
        throw Error(ErrorCode::BadExponents, std::to_string(exps.size()) + " exponents for " +
                                                 std::to_string(n) + " variables");
    for (std::size_t j = 0; j < exps.size(); ++j) {
        if (exps[j] < 0) throw Error(ErrorCode::BadExponents, "negative exponent");
        if (j > 0 && exps[j] >= exps[j - 1])
            throw Error(ErrorCode::BadExponents, "exponents must be strictly decreasing");
    }
}

/// Jacobi-Trudi determinant det[H_(lambda_i + j - i)] given H_0..H_max of xs.
template <ExactField F>
scalar_t<F> jacobi_trudi(const F& field, const std::vector<scalar_t<F>>& htable, const std::vector<long>& exps) {
    const auto n = static_cast<long>(exps.size());
    DenseMatrix<F> jt(field, exps.size(), exps.size());
    for (long i = 0; i < n; ++i) {
        const long lambda = exps[i] - (n - 1 - i);
        for (long j = 0; j < n; ++j) {
            const long m = lambda + j - i;
            if (m >= 0) jt(i, j) = htable.at(static_cast<std::size_t>(m));
        }
    }
    return bareiss_det(jt, Execution::Serial);
}

/// Lexicographic n-subsets of `pool` (already ascending).
inline std::vector<std::vector<std::size_t>> subsets_of(const std::vector<std::size_t>& pool, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    if (n > pool.size()) return out;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        std::vector<std::size_t> s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = pool[idx[i]];
        out.push_back(std::move(s));
        std::size_t i = n;
        while (i > 0 && idx[i - 1] == i - 1 + pool.size() - n) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace detail

/// Schur factor of the generalized Vandermonde minor det[x_r^(e_j)] with
/// e_1 > ... > e_n >= 0: the Jacobi-Trudi determinant det[H_(lambda_i+j-i)(xs)],
/// lambda_i = e_i - (n - i). Then
///   det[x_r^(e_j)] = prod_{r<r'} (x_r - x_r') * schur_minor(xs, e).
template <ExactField F>
scalar_t<F> schur_minor(const F& field, const std::vector<scalar_t<F>>& xs, const std::vector<long>& exps) {
    detail::check_exponents(exps, xs.size());
    if (exps.empty()) return field.one();
    const auto table = complete_homogeneous_table(field, xs, static_cast<std::size_t>(exps.front()));
    return detail::jacobi_trudi(field, table, exps);
}

/// sum over n-subsets I of {0..k}: det V(:,I) * prod_{i in I} alpha_i * det W(:,I).
/// Subsets hitting a zero coefficient are skipped. Terms are listed in
/// lexicographic subset order and summed in that order regardless of `exec`.
template <ExactField F>
DetReport<F> det_cauchy_binet(const HomogeneousPoly<F>& p, const PointVectors<F>& pts, MinorMode mode,
                              Execution exec = Execution::Parallel) {
    const std::size_t k = p.degree();
    const std::size_t n = pts.size();
    if (n == 0 || n > k + 1)
        throw Error(ErrorCode::SizeMismatch, "Cauchy-Binet expansion needs 1 <= n <= k+1 = " +
                                                 std::to_string(k + 1) + ", got n = " + std::to_string(n));
    const auto& field = p.field();
    const auto subsets = detail::subsets_of(support(p), n);

    const auto vdm_a = vandermonde_product(field, pts.a);
    const auto vdm_b = vandermonde_product(field, pts.b);
    const auto half_turn = sign_power(field, choose2(n));

    // DIRECT needs the rectangular factors, H_ROUTE the H tables up to degree k
    std::optional<DenseMatrix<F>> V, W;
    std::vector<scalar_t<F>> ha, hb;
    if (mode == MinorMode::Direct) {
        V = build_vandermonde_desc(field, pts.a, k);
        W = build_vandermonde_asc(field, pts.b, k);
    } else {
        ha = complete_homogeneous_table(field, pts.a, k);
        hb = complete_homogeneous_table(field, pts.b, k);
    }

    std::vector<scalar_t<F>> terms(subsets.size(), field.zero());
    const auto count = static_cast<std::ptrdiff_t>(subsets.size());
    const bool parallel = exec == Execution::Parallel;
#pragma omp parallel for schedule(dynamic) if (parallel && count > 16)
    for (std::ptrdiff_t t = 0; t < count; ++t) {
        const auto& I = subsets[static_cast<std::size_t>(t)];
        scalar_t<F> alpha = field.one();
        for (auto i : I) alpha *= p[i];
        scalar_t<F> minor_v, minor_w;
        if (mode == MinorMode::Direct) {
            minor_v = minor_det(*V, I);
            minor_w = minor_det(*W, I);
        } else {
            // V(:,I) has exponents k - i_j, already descending
            std::vector<long> ev(n), ew(n);
            for (std::size_t j = 0; j < n; ++j) {
                ev[j] = static_cast<long>(k - I[j]);
                ew[j] = static_cast<long>(I[n - 1 - j]);
            }
            // descending form carries (-1)^C(n,2) against prod (x_j - x_i);
            // W(:,I) is ascending, so one more column reversal cancels it
            minor_v = half_turn * vdm_a * detail::jacobi_trudi(field, ha, ev);
            minor_w = vdm_b * detail::jacobi_trudi(field, hb, ew);
        }
        terms[static_cast<std::size_t>(t)] = minor_v * alpha * minor_w;
    }

    DetReport<F> rep{field.zero(), DetMethod::CauchyBinet, 1, coefficient_product(p), vdm_a, vdm_b, mode, {}};
    rep.subset_terms.reserve(subsets.size());
    for (std::size_t t = 0; t < subsets.size(); ++t) {
        rep.value += terms[t];
        rep.subset_terms.push_back({subsets[t], terms[t]});
    }
    return rep;
}

/// Oracle determinant of [p(a_r, b_s)].
template <ExactField F>
DetReport<F> det_oracle(const HomogeneousPoly<F>& p, const PointVectors<F>& pts,
                        Execution exec = Execution::Parallel) {
    const auto& field = p.field();
    return {bareiss_det(build_evaluation_matrix(p, pts), exec), DetMethod::Oracle, 1, coefficient_product(p),
            vandermonde_product(field, pts.a), vandermonde_product(field, pts.b), std::nullopt, {}};
}

/// Oracle determinant of [f(a_r + b_s)].
template <ExactField F>
DetReport<F> det_oracle(const UnivariatePoly<F>& f, const PointVectors<F>& pts,
                        Execution exec = Execution::Parallel) {
    const auto& field = f.field();
    return {bareiss_det(build_evaluation_matrix(f, pts), exec), DetMethod::Oracle, 1, field.one(),
            vandermonde_product(field, pts.a), vandermonde_product(field, pts.b), std::nullopt, {}};
}

/// n >= k+2: zero without building A. n = k+1: closed form. n <= k: Cauchy-Binet.
template <ExactField F>
DetReport<F> det_structured(const HomogeneousPoly<F>& p, const PointVectors<F>& pts,
                            MinorMode mode = MinorMode::Direct, Execution exec = Execution::Parallel) {
    const std::size_t k = p.degree();
    const std::size_t n = pts.size();
    if (n >= k + 2) {
        const auto& field = p.field();
        return {field.zero(), DetMethod::VanishRank, 1, coefficient_product(p), vandermonde_product(field, pts.a),
                vandermonde_product(field, pts.b), std::nullopt, {}};
    }
    if (n == k + 1) return det_borderline(p, pts);
    return det_cauchy_binet(p, pts, mode, exec);
}

/// Closed form for [f(a_r + b_s)] with n = deg f + 1:
/// lead^n (-1)^C(n,2) prod_i C(k,i) vdm(a) vdm(b).
template <ExactField F>
DetReport<F> det_sum_form(const UnivariatePoly<F>& f, const PointVectors<F>& pts) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroLeadingCoeff, "sum form of the zero polynomial");
    const std::size_t k = f.degree();
    const std::size_t n = pts.size();
    if (n != k + 1)
        throw Error(ErrorCode::SizeMismatch, "sum-form formula needs n = deg f + 1 = " + std::to_string(k + 1) +
                                                 ", got n = " + std::to_string(n));
    const auto& field = f.field();
    mpz_class binoms = 1;
    for (std::size_t i = 0; i <= k; ++i) binoms *= binomial(k, i);
    DetReport<F> rep{field.zero(),
                     DetMethod::SumForm,
                     (choose2(n) % 2 == 0) ? 1 : -1,
                     power(field, f.leading(), n) * field.from_mpz(binoms),
                     vandermonde_product(field, pts.a),
                     vandermonde_product(field, pts.b),
                     std::nullopt,
                     {}};
    rep.value = rep.coeff_product * rep.vdm_a * rep.vdm_b;
    if (rep.sign_factor < 0) rep.value = -rep.value;
    return rep;
}

/// Oracle determinant of the Pascal core C_f, n = deg f + 1.
template <ExactField F>
scalar_t<F> pascal_core_det(const UnivariatePoly<F>& f, std::size_t n) {
    if (n != f.degree() + 1)
        throw Error(ErrorCode::SizeMismatch, "Pascal core needs n = deg f + 1 = " + std::to_string(f.degree() + 1));
    return bareiss_det(expand_sum_form(f, n), Execution::Serial);
}

/// (x, y) -> (alpha x + beta y, gamma x + delta y), invertible.
template <ExactField F>
struct LinearChange {
    scalar_t<F> alpha, beta, gamma, delta;

    LinearChange(scalar_t<F> a, scalar_t<F> b, scalar_t<F> g, scalar_t<F> d)
        : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(g)), delta(std::move(d)) {
        if ((alpha * delta - beta * gamma).is_zero())
            throw Error(ErrorCode::SingularB, "alpha*delta - beta*gamma = 0");
    }

    scalar_t<F> c() const { return alpha + gamma; }
    scalar_t<F> d() const { return beta + delta; }
    bool operator==(const LinearChange&) const = default;
};

template <ExactField F>
struct EquivariantPrediction {
    scalar_t<F> c;
    scalar_t<F> d;
    scalar_t<F> predicted;
};

/// det [f(x' + y')] at (a_r, b_s) predicted as c^C(n,2) d^C(n,2) det [f(a_r + b_s)].
template <ExactField F>
EquivariantPrediction<F> predict_equivariant_det(const UnivariatePoly<F>& f, const LinearChange<F>& B,
                                                 const PointVectors<F>& pts) {
    const auto& field = f.field();
    const auto base = det_sum_form(f, pts).value;
    const auto e = choose2(pts.size());
    auto c = B.c();
    auto d = B.d();
    auto predicted = power(field, c, e) * power(field, d, e) * base;
    return {std::move(c), std::move(d), std::move(predicted)};
}

/// [p_B(a_r, b_s)] with p = f(x + y), built by substituting B directly.
template <ExactField F>
DenseMatrix<F> build_transformed_matrix(const UnivariatePoly<F>& f, const LinearChange<F>& B,
                                        const PointVectors<F>& pts) {
    const std::size_t n = pts.size();
    DenseMatrix<F> m(f.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
            const auto x = B.alpha * pts.a[r] + B.beta * pts.b[s];
            const auto y = B.gamma * pts.a[r] + B.delta * pts.b[s];
            m(r, s) = f(x + y);
        }
    return m;
}

}  // namespace polydet

#endif

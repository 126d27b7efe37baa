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

#ifndef POLYDET_POLY_HPP
#define POLYDET_POLY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "polydet/scalar.hpp"

namespace polydet {

/// p(x, y) = sum_i coeffs[i] x^(k-i) y^i, homogeneous of formal degree k.
/// Any coefficient may be zero, including the zero polynomial.
template <ExactField F>
class HomogeneousPoly {
   public:
    using value_type = scalar_t<F>;

    HomogeneousPoly(F field, std::vector<value_type> coeffs)
        : field_(std::move(field)), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw Error(ErrorCode::SizeMismatch, "homogeneous polynomial needs k+1 >= 1 coefficients");
    }

    const F& field() const noexcept { return field_; }
    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const std::vector<value_type>& coeffs() const noexcept { return coeffs_; }
    const value_type& operator[](std::size_t i) const { return coeffs_.at(i); }

    HomogeneousPoly scaled(const value_type& c) const {
        auto out = coeffs_;
        for (auto& x : out) x *= c;
        return HomogeneousPoly(field_, std::move(out));
    }

    bool operator==(const HomogeneousPoly&) const = default;

   private:
    F field_;
    std::vector<value_type> coeffs_;
};

/// f(t) = sum_i coeffs[i] t^i. Used as the sum form p(x, y) = f(x + y).
template <ExactField F>
class UnivariatePoly {
   public:
    using value_type = scalar_t<F>;

    UnivariatePoly(F field, std::vector<value_type> coeffs)
        : field_(std::move(field)), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw Error(ErrorCode::SizeMismatch, "univariate polynomial needs a coefficient");
    }

    const F& field() const noexcept { return field_; }
    const std::vector<value_type>& coeffs() const noexcept { return coeffs_; }

    /// Index of the last nonzero coefficient; 0 for the zero polynomial.
    std::size_t degree() const noexcept {
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            if (!coeffs_[i].is_zero()) return i;
        return 0;
    }
    bool is_zero() const noexcept { return degree() == 0 && coeffs_[0].is_zero(); }
    value_type leading() const { return coeffs_[degree()]; }

    /// Coefficient of t^m, zero beyond the stored vector.
    value_type coeff(std::size_t m) const { return m < coeffs_.size() ? coeffs_[m] : field_.zero(); }

    value_type operator()(const value_type& t) const {
        value_type acc = field_.zero();
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
        return acc;
    }

    bool operator==(const UnivariatePoly&) const = default;

   private:
    F field_;
    std::vector<value_type> coeffs_;
};

template <ExactField F>
scalar_t<F> eval_homogeneous(const HomogeneousPoly<F>& p, const scalar_t<F>& x, const scalar_t<F>& y) {
    // Horner in y, carrying x^(k-i) alongside
    const auto& c = p.coeffs();
    const std::size_t k = p.degree();
    scalar_t<F> acc = c[k];
    scalar_t<F> xpow = x;
    for (std::size_t i = k; i-- > 0;) {
        acc = acc * y + c[i] * xpow;
        if (i != 0) xpow *= x;
    }
    return acc;
}

/// (x + y)^k.
template <ExactField F>
HomogeneousPoly<F> sum_power_poly(const F& field, std::size_t k) {
    std::vector<scalar_t<F>> c;
    c.reserve(k + 1);
    for (std::size_t i = 0; i <= k; ++i) c.push_back(field.from_mpz(binomial(k, i)));
    return HomogeneousPoly<F>(field, std::move(c));
}

/// sum_i x^(k-i) y^i.
template <ExactField F>
HomogeneousPoly<F> all_ones_poly(const F& field, std::size_t k) {
    return HomogeneousPoly<F>(field, std::vector<scalar_t<F>>(k + 1, field.one()));
}

/// sum_i (-1)^i x^(k-i) y^i.
template <ExactField F>
HomogeneousPoly<F> alternating_poly(const F& field, std::size_t k) {
    std::vector<scalar_t<F>> c;
    c.reserve(k + 1);
    for (std::size_t i = 0; i <= k; ++i) c.push_back(sign_power(field, i));
    return HomogeneousPoly<F>(field, std::move(c));
}

/// Indices i with coeffs[i] != 0, ascending.
template <ExactField F>
std::vector<std::size_t> support(const HomogeneousPoly<F>& p) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i <= p.degree(); ++i)
        if (!p[i].is_zero()) s.push_back(i);
    return s;
}

/// H_0 .. H_max_m of the full vector xs, via the prefix recursion
/// H_m(x_1..x_j) = H_m(x_1..x_{j-1}) + x_j H_{m-1}(x_1..x_j).
template <ExactField F>
std::vector<scalar_t<F>> complete_homogeneous_table(const F& field, const std::vector<scalar_t<F>>& xs,
                                                    std::size_t max_m) {
    // row j holds H_m of the prefix of length j; only the previous row is kept
    std::vector<scalar_t<F>> row(max_m + 1, field.zero());
    row[0] = field.one();
    for (const auto& x : xs) {
        for (std::size_t m = 1; m <= max_m; ++m) row[m] += x * row[m - 1];
    }
    return row;
}

/// H_m(xs): 1 for m = 0, 0 for m < 0, 0 for empty xs and m >= 1.
template <ExactField F>
scalar_t<F> complete_homogeneous(const F& field, long m, const std::vector<scalar_t<F>>& xs) {
    if (m < 0) return field.zero();
    if (m == 0) return field.one();
    return complete_homogeneous_table(field, xs, static_cast<std::size_t>(m)).back();
}

}  // namespace polydet

#endif

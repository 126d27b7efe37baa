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

#ifndef POLYDET_MATRIX_HPP
#define POLYDET_MATRIX_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polydet/poly.hpp"
#include "polydet/scalar.hpp"

namespace polydet {

/// Row-major dense matrix over an exact field.
template <ExactField F>
class DenseMatrix {
   public:
    using value_type = scalar_t<F>;

    DenseMatrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    DenseMatrix(F field, std::size_t rows, std::size_t cols, std::vector<value_type> entries)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw Error(ErrorCode::SizeMismatch, "expected " + std::to_string(rows_ * cols_) +
                                                     " entries, got " + std::to_string(data_.size()));
    }

    static DenseMatrix identity(const F& field, std::size_t n) {
        DenseMatrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    const F& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<value_type>& entries() const noexcept { return data_; }

    DenseMatrix transpose() const {
        DenseMatrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    /// M(:, I) for an increasing column index list I.
    DenseMatrix select_columns(std::span<const std::size_t> cols) const {
        DenseMatrix out(field_, rows_, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j] >= cols_)
                throw Error(ErrorCode::BadSubsetSize, "column " + std::to_string(cols[j]) + " out of range");
            for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, cols[j]);
        }
        return out;
    }

    bool operator==(const DenseMatrix&) const = default;

   private:
    F field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<value_type> data_;
};

template <ExactField F>
DenseMatrix<F> operator*(const DenseMatrix<F>& lhs, const DenseMatrix<F>& rhs) {
    if (lhs.cols() != rhs.rows())
        throw Error(ErrorCode::SizeMismatch, "product of " + std::to_string(lhs.rows()) + "x" +
                                                 std::to_string(lhs.cols()) + " and " +
                                                 std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
    DenseMatrix<F> out(lhs.field(), lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t l = 0; l < lhs.cols(); ++l) {
            if (lhs(i, l).is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += lhs(i, l) * rhs(l, j);
        }
    return out;
}

template <ExactField F>
DenseMatrix<F> diagonal(const F& field, const std::vector<scalar_t<F>>& d) {
    DenseMatrix<F> m(field, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

/// Evaluation nodes a = (a_1..a_n), b = (b_1..b_n).
template <ExactField F>
struct PointVectors {
    std::vector<scalar_t<F>> a;
    std::vector<scalar_t<F>> b;

    PointVectors(std::vector<scalar_t<F>> a_in, std::vector<scalar_t<F>> b_in)
        : a(std::move(a_in)), b(std::move(b_in)) {
        if (a.size() != b.size())
            throw Error(ErrorCode::SizeMismatch, "|a| = " + std::to_string(a.size()) +
                                                     " but |b| = " + std::to_string(b.size()));
    }

    std::size_t size() const noexcept { return a.size(); }
    bool operator==(const PointVectors&) const = default;
};

/// [p(a_r, b_s)].
template <ExactField F>
DenseMatrix<F> build_evaluation_matrix(const HomogeneousPoly<F>& p, const PointVectors<F>& pts) {
    const std::size_t n = pts.size();
    DenseMatrix<F> m(p.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) m(r, s) = eval_homogeneous(p, pts.a[r], pts.b[s]);
    return m;
}

/// [f(a_r + b_s)].
template <ExactField F>
DenseMatrix<F> build_evaluation_matrix(const UnivariatePoly<F>& f, const PointVectors<F>& pts) {
    const std::size_t n = pts.size();
    DenseMatrix<F> m(f.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) m(r, s) = f(pts.a[r] + pts.b[s]);
    return m;
}

/// n x (k+1), column j holds a_r^(k-j).
template <ExactField F>
DenseMatrix<F> build_vandermonde_desc(const F& field, const std::vector<scalar_t<F>>& a, std::size_t k) {
    DenseMatrix<F> m(field, a.size(), k + 1);
    for (std::size_t r = 0; r < a.size(); ++r) {
        scalar_t<F> x = field.one();
        for (std::size_t j = k + 1; j-- > 0;) {
            m(r, j) = x;
            x *= a[r];
        }
    }
    return m;
}

/// n x (k+1), column j holds b_s^j.
template <ExactField F>
DenseMatrix<F> build_vandermonde_asc(const F& field, const std::vector<scalar_t<F>>& b, std::size_t k) {
    DenseMatrix<F> m(field, b.size(), k + 1);
    for (std::size_t s = 0; s < b.size(); ++s) {
        scalar_t<F> x = field.one();
        for (std::size_t j = 0; j <= k; ++j) {
            m(s, j) = x;
            x *= b[s];
        }
    }
    return m;
}

template <ExactField F>
struct FactorizationParts {
    DenseMatrix<F> V;  ///< descending powers of a
    DenseMatrix<F> D;  ///< diag(alpha_0..alpha_k)
    DenseMatrix<F> W;  ///< ascending powers of b

    DenseMatrix<F> product() const { return V * D * W.transpose(); }
};

/// A = V D W^T.
template <ExactField F>
FactorizationParts<F> factorization_parts(const HomogeneousPoly<F>& p, const PointVectors<F>& pts) {
    const auto& field = p.field();
    return {build_vandermonde_desc(field, pts.a, p.degree()), diagonal(field, p.coeffs()),
            build_vandermonde_asc(field, pts.b, p.degree())};
}

/// Pascal core of f(x + y): c_ij = alpha_(i+j) C(i+j, i), 0 <= i, j < n.
template <ExactField F>
DenseMatrix<F> expand_sum_form(const UnivariatePoly<F>& f, std::size_t n) {
    if (n == 0) throw Error(ErrorCode::SizeMismatch, "coefficient grid needs n >= 1");
    const auto& field = f.field();
    DenseMatrix<F> grid(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto alpha = f.coeff(i + j);
            if (!alpha.is_zero()) grid(i, j) = alpha * field.from_mpz(binomial(i + j, i));
        }
    return grid;
}

/// Exact rank by Gaussian elimination with nonzero pivoting.
template <ExactField F>
std::size_t rank(DenseMatrix<F> m) {
    std::size_t found = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t c = 0; c < cols && found < rows; ++c) {
        std::size_t pivot = found;
        while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != found)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(pivot, j), m(found, j));
        const auto inv = m(found, c).inverse();
        for (std::size_t r = found + 1; r < rows; ++r) {
            if (m(r, c).is_zero()) continue;
            const auto factor = m(r, c) * inv;
            for (std::size_t j = c; j < cols; ++j) m(r, j) -= factor * m(found, j);
        }
        ++found;
    }
    return found;
}

/// Explicit cofactor expansion, n <= 3 only.
template <ExactField F>
scalar_t<F> det_cofactor(const DenseMatrix<F>& m) {
    switch (m.rows()) {
        case 0: return m.field().one();
        case 1: return m(0, 0);
        case 2: return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        case 3:
            return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                   m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                   m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        default: throw Error(ErrorCode::SizeMismatch, "cofactor expansion is limited to n <= 3");
    }
}

enum class Execution { Serial, Parallel };

/// Fraction-free elimination on a square integer matrix (row-major, consumed).
mpz_class bareiss_det_integer(std::vector<mpz_class> entries, std::size_t n,
                              Execution exec = Execution::Parallel);

/// Gaussian elimination over F_p.
ModP gauss_det_mod(std::vector<ModP> entries, std::size_t n, std::uint64_t p,
                   Execution exec = Execution::Parallel);

/// Determinant oracle. Rationals are lifted to an integer matrix by clearing
/// each row's denominators and eliminated fraction free; F_p uses ordinary
/// elimination. n <= 3 goes through cofactor expansion.
Rational bareiss_det(const DenseMatrix<RationalField>& m, Execution exec = Execution::Parallel);
ModP bareiss_det(const DenseMatrix<PrimeField>& m, Execution exec = Execution::Parallel);

/// det M(:, I), with |I| = rows of M.
template <ExactField F>
scalar_t<F> minor_det(const DenseMatrix<F>& m, std::span<const std::size_t> cols) {
    if (cols.size() != m.rows())
        throw Error(ErrorCode::BadSubsetSize, "subset of size " + std::to_string(cols.size()) +
                                                  " for " + std::to_string(m.rows()) + " rows");
    return bareiss_det(m.select_columns(cols), Execution::Serial);
}

}  // namespace polydet

#endif

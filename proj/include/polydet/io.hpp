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

#ifndef POLYDET_IO_HPP
#define POLYDET_IO_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "polydet/det.hpp"
#include "polydet/ffprob.hpp"

namespace polydet {

using json = nlohmann::ordered_json;

/// Polynomial as written in an instance file: scalars stay strings until a
/// domain is chosen.
struct PolySpec {
    enum class Kind { Homogeneous, SumForm };

    Kind kind = Kind::Homogeneous;
    std::vector<std::string> coeffs;

    bool operator==(const PolySpec&) const = default;
};

struct InstanceFile {
    std::optional<ScalarDomain> domain;
    PolySpec poly;
    std::vector<std::string> a;
    std::vector<std::string> b;
    std::optional<std::array<std::string, 4>> linear_change;  ///< alpha, beta, gamma, delta

    bool operator==(const InstanceFile&) const = default;
};

/// Throws PARSE naming the offending field.
InstanceFile parse_instance(const json& j);
InstanceFile parse_instance_text(const std::string& text);
json to_json(const InstanceFile& inst);

template <ExactField F>
struct Instance {
    F field;
    std::variant<HomogeneousPoly<F>, UnivariatePoly<F>> poly;
    PointVectors<F> pts;
    std::optional<LinearChange<F>> linear_change;

    bool is_sum_form() const noexcept { return poly.index() == 1; }
    std::size_t degree() const {
        return std::visit([](const auto& p) { return p.degree(); }, poly);
    }
};

namespace detail {

template <ExactField F>
std::vector<scalar_t<F>> parse_scalars(const F& field, const std::vector<std::string>& xs, const std::string& where) {
    std::vector<scalar_t<F>> out;
    out.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        try {
            out.push_back(field.parse(xs[i]));
        } catch (const Error& e) {
            throw Error(ErrorCode::Parse, "field '" + where + "[" + std::to_string(i) + "]': " + e.what());
        }
    }
    return out;
}

}  // namespace detail

/// Parses every scalar in `field`. Throws PARSE for bad scalars and
/// mismatched point counts, SINGULAR_B for a non-invertible linear change.
template <ExactField F>
Instance<F> materialize(const InstanceFile& file, const F& field) {
    auto coeffs = detail::parse_scalars(field, file.poly.coeffs, "poly.coeffs");
    auto a = detail::parse_scalars(field, file.a, "a");
    auto b = detail::parse_scalars(field, file.b, "b");
    if (a.size() != b.size())
        throw Error(ErrorCode::Parse, "fields 'a' and 'b' differ in length (" + std::to_string(a.size()) +
                                          " vs " + std::to_string(b.size()) + ")");
    std::variant<HomogeneousPoly<F>, UnivariatePoly<F>> poly =
        file.poly.kind == PolySpec::Kind::Homogeneous
            ? std::variant<HomogeneousPoly<F>, UnivariatePoly<F>>(HomogeneousPoly<F>(field, std::move(coeffs)))
            : std::variant<HomogeneousPoly<F>, UnivariatePoly<F>>(UnivariatePoly<F>(field, std::move(coeffs)));
    std::optional<LinearChange<F>> B;
    if (file.linear_change) {
        const std::vector<std::string> raw(file.linear_change->begin(), file.linear_change->end());
        auto v = detail::parse_scalars(field, raw, "linear_change");
        B.emplace(v[0], v[1], v[2], v[3]);
    }
    return Instance<F>{field, std::move(poly), PointVectors<F>(std::move(a), std::move(b)), std::move(B)};
}

template <ExactField F>
json to_json(const DenseMatrix<F>& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

template <ExactField F>
DenseMatrix<F> matrix_from_json(const F& field, const json& j) {
    try {
        const auto rows = j.at("rows").get<std::size_t>();
        const auto cols = j.at("cols").get<std::size_t>();
        const auto& entries = j.at("entries");
        if (entries.size() != rows) throw Error(ErrorCode::Parse, "field 'entries': row count != rows");
        std::vector<scalar_t<F>> data;
        data.reserve(rows * cols);
        for (const auto& row : entries) {
            if (row.size() != cols) throw Error(ErrorCode::Parse, "field 'entries': row length != cols");
            for (const auto& x : row) data.push_back(field.parse(x.get<std::string>()));
        }
        return DenseMatrix<F>(field, rows, cols, std::move(data));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("matrix: ") + e.what());
    }
}

template <ExactField F>
json to_json(const DetReport<F>& rep, bool with_terms) {
    std::string method(method_name(rep.method));
    json j{{"value", rep.value.to_string()},
           {"method", method},
           {"sign_factor", rep.sign_factor},
           {"coeff_product", rep.coeff_product.to_string()},
           {"vdm_a", rep.vdm_a.to_string()},
           {"vdm_b", rep.vdm_b.to_string()}};
    if (rep.minor_mode) j["minor_mode"] = std::string(minor_mode_name(*rep.minor_mode));
    if (with_terms && rep.method == DetMethod::CauchyBinet) {
        json terms = json::array();
        for (const auto& t : rep.subset_terms) terms.push_back(json{{"subset", t.subset}, {"term", t.term.to_string()}});
        j["subset_terms"] = std::move(terms);
    }
    return j;
}

json to_json(const ExperimentResult& r);

}  // namespace polydet

#endif

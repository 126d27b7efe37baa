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

#include "polydet/io.hpp"

namespace polydet {

namespace {

std::string scalar_string(const json& x, const std::string& where) {
    if (x.is_string()) return x.get<std::string>();
    if (x.is_number_integer()) return x.dump();
    throw Error(ErrorCode::Parse, "field '" + where + "': expected a scalar string");
}

std::vector<std::string> scalar_list(const json& j, const char* key) {
    if (!j.contains(key)) throw Error(ErrorCode::Parse, std::string("missing field '") + key + "'");
    const auto& arr = j.at(key);
    if (!arr.is_array()) throw Error(ErrorCode::Parse, std::string("field '") + key + "': expected an array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(scalar_string(arr[i], std::string(key) + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

InstanceFile parse_instance(const json& j) {
    if (!j.is_object()) throw Error(ErrorCode::Parse, "instance must be a JSON object");
    InstanceFile inst;
    if (j.contains("domain")) {
        if (!j["domain"].is_string()) throw Error(ErrorCode::Parse, "field 'domain': expected a string");
        try {
            inst.domain = ScalarDomain::parse(j["domain"].get<std::string>());
        } catch (const Error& e) {
            throw Error(ErrorCode::Parse, std::string("field 'domain': ") + e.what());
        }
    }
    if (!j.contains("poly") || !j["poly"].is_object()) throw Error(ErrorCode::Parse, "missing field 'poly'");
    const auto& poly = j["poly"];
    const std::string kind = poly.value("kind", std::string("homogeneous"));
    if (kind == "homogeneous") {
        inst.poly.kind = PolySpec::Kind::Homogeneous;
    } else if (kind == "sum_form") {
        inst.poly.kind = PolySpec::Kind::SumForm;
    } else {
        throw Error(ErrorCode::Parse, "field 'poly.kind': expected \"homogeneous\" or \"sum_form\"");
    }
    try {
        inst.poly.coeffs = scalar_list(poly, "coeffs");
    } catch (const Error& e) {
        throw Error(ErrorCode::Parse, std::string("in 'poly': ") + e.what());
    }
    if (inst.poly.coeffs.empty()) throw Error(ErrorCode::Parse, "field 'poly.coeffs': must be nonempty");
    if (poly.contains("degree")) {
        if (!poly["degree"].is_number_unsigned() ||
            poly["degree"].get<std::size_t>() + 1 != inst.poly.coeffs.size())
            throw Error(ErrorCode::Parse, "field 'poly.degree': must equal len(coeffs) - 1");
    }
    inst.a = scalar_list(j, "a");
    inst.b = scalar_list(j, "b");
    if (inst.a.size() != inst.b.size()) throw Error(ErrorCode::Parse, "fields 'a' and 'b' differ in length");
    if (j.contains("linear_change")) {
        const auto lc = scalar_list(j, "linear_change");
        if (lc.size() != 4) throw Error(ErrorCode::Parse, "field 'linear_change': expected 4 scalars");
        inst.linear_change = std::array<std::string, 4>{lc[0], lc[1], lc[2], lc[3]};
    }
    return inst;
}

InstanceFile parse_instance_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
    }
    return parse_instance(j);
}

json to_json(const InstanceFile& inst) {
    json j = json::object();
    if (inst.domain) j["domain"] = inst.domain->to_string();
    json poly = json::object();
    if (inst.poly.kind == PolySpec::Kind::Homogeneous) {
        poly["kind"] = "homogeneous";
        poly["degree"] = inst.poly.coeffs.size() - 1;
    } else {
        poly["kind"] = "sum_form";
    }
    poly["coeffs"] = inst.poly.coeffs;
    j["poly"] = std::move(poly);
    j["a"] = inst.a;
    j["b"] = inst.b;
    if (inst.linear_change) j["linear_change"] = *inst.linear_change;
    return j;
}

json to_json(const ExperimentResult& r) {
    json j{{"p", r.modulus},
           {"n", r.n},
           {"k", r.k},
           {"trials", r.trials},
           {"seed", r.seed},
           {"zero_count", r.zero_count},
           {"empirical", r.empirical.to_string()},
           {"empirical_float", r.empirical.raw().get_d()},
           {"sz_bound", r.sz_bound.to_string()},
           {"sz_bound_float", r.sz_bound.raw().get_d()}};
    if (r.exact_borderline) {
        j["exact_borderline"] = r.exact_borderline->to_string();
        j["exact_borderline_float"] = r.exact_borderline->raw().get_d();
    } else {
        j["exact_borderline"] = nullptr;
    }
    j["confidence_halfwidth"] = r.confidence_halfwidth;
    j["oracle_checked"] = r.oracle_checked;
    return j;
}

}  // namespace polydet

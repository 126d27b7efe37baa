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

#include "polydet/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "polydet/bench.hpp"
#include "polydet/io.hpp"

namespace polydet {

namespace {

struct CommonOptions {
    std::string in_path;
    std::string domain;
};

struct DetOptions {
    std::string method = "auto";
    std::string minor_mode = "direct";
    bool show_terms = false;
};

struct FfprobOptions {
    std::uint64_t p = 0;
    std::size_t n = 0;
    long k = -1;
    std::vector<long long> coeffs;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    bool csv = false;
};

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

InstanceFile load_instance(const CommonOptions& opt, std::istream& in) {
    std::string text;
    if (opt.in_path.empty() || opt.in_path == "-") {
        text = read_all(in);
    } else {
        std::ifstream f(opt.in_path);
        if (!f) throw Error(ErrorCode::Parse, "cannot open '" + opt.in_path + "'");
        text = read_all(f);
    }
    return parse_instance_text(text);
}

ScalarDomain resolve_domain(const CommonOptions& opt, const InstanceFile& file) {
    if (!opt.domain.empty()) return ScalarDomain::parse(opt.domain);
    return file.domain.value_or(ScalarDomain{});
}

template <class Fn>
int with_field(const ScalarDomain& d, Fn&& fn) {
    if (d.kind == ScalarDomain::Kind::Rational) return fn(RationalField{});
    return fn(PrimeField(d.modulus));
}

MinorMode parse_minor_mode(const std::string& s) {
    if (s == "direct") return MinorMode::Direct;
    if (s == "h-route") return MinorMode::HRoute;
    throw Error(ErrorCode::Parse, "--minor-mode must be direct or h-route");
}

json instance_header(const ScalarDomain& d, const InstanceFile& file, std::size_t n, std::size_t k) {
    return json{{"domain", d.to_string()},
                {"kind", file.poly.kind == PolySpec::Kind::Homogeneous ? "homogeneous" : "sum_form"},
                {"n", n},
                {"k", k}};
}

template <ExactField F>
int cmd_det(const InstanceFile& file, const ScalarDomain& d, const F& field, const DetOptions& opt,
            std::ostream& out) {
    const auto inst = materialize(file, field);
    const auto mode = parse_minor_mode(opt.minor_mode);
    const auto& m = opt.method;
    DetReport<F> rep = [&]() -> DetReport<F> {
        if (const auto* p = std::get_if<HomogeneousPoly<F>>(&inst.poly)) {
            if (m == "auto") return det_structured(*p, inst.pts, mode);
            if (m == "borderline") return det_borderline(*p, inst.pts);
            if (m == "cauchy-binet") return det_cauchy_binet(*p, inst.pts, mode);
            if (m == "oracle") return det_oracle(*p, inst.pts);
            throw Error(ErrorCode::Parse, "--method " + m + " does not apply to a homogeneous polynomial");
        }
        const auto& f = std::get<UnivariatePoly<F>>(inst.poly);
        if (m == "auto")
            return (!f.is_zero() && inst.pts.size() == f.degree() + 1) ? det_sum_form(f, inst.pts)
                                                                       : det_oracle(f, inst.pts);
        if (m == "sum-form") return det_sum_form(f, inst.pts);
        if (m == "oracle") return det_oracle(f, inst.pts);
        throw Error(ErrorCode::Parse, "--method " + m + " does not apply to a sum_form polynomial");
    }();
    json j = instance_header(d, file, inst.pts.size(), inst.degree());
    j.update(to_json(rep, opt.show_terms));
    out << j.dump(2) << "\n";
    return kExitOk;
}

template <ExactField F>
struct Check {
    std::string label;
    scalar_t<F> value;
};

template <ExactField F>
bool report_group(const std::string& title, const std::vector<Check<F>>& checks, std::ostream& out) {
    out << "[" << title << "]\n";
    std::size_t width = 0;
    for (const auto& c : checks) width = std::max(width, c.label.size());
    for (const auto& c : checks) out << "  " << std::left << std::setw(static_cast<int>(width)) << c.label << "  " << c.value << "\n";
    out << "  equality matrix:\n";
    bool all = true;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        out << "    " << std::left << std::setw(static_cast<int>(width)) << checks[i].label << " ";
        for (std::size_t j = 0; j < checks.size(); ++j) {
            const bool eq = checks[i].value == checks[j].value;
            all = all && eq;
            out << (eq ? " =" : " x");
        }
        out << "\n";
    }
    if (!all) {
        out << "  mismatch:";
        for (const auto& c : checks) out << " " << c.label << "=" << c.value;
        out << "\n";
    }
    return all;
}

template <ExactField F>
int cmd_verify(const InstanceFile& file, const ScalarDomain& d, const F& field,
               const std::optional<std::string>& expect, std::ostream& out) {
    const auto inst = materialize(file, field);
    const std::size_t n = inst.pts.size();
    const std::size_t k = inst.degree();
    out << "domain " << d.to_string() << "  kind "
        << (inst.is_sum_form() ? "sum_form" : "homogeneous") << "  n " << n << "  k " << k << "\n";

    std::vector<Check<F>> base;
    std::vector<Check<F>> transformed;
    if (const auto* p = std::get_if<HomogeneousPoly<F>>(&inst.poly)) {
        if (n >= k + 2) base.push_back({"VANISH_RANK", det_structured(*p, inst.pts).value});
        if (n == k + 1) base.push_back({"BORDERLINE", det_borderline(*p, inst.pts).value});
        if (n >= 1 && n <= k + 1) {
            base.push_back({"CAUCHY_BINET(DIRECT)", det_cauchy_binet(*p, inst.pts, MinorMode::Direct).value});
            base.push_back({"CAUCHY_BINET(H_ROUTE)", det_cauchy_binet(*p, inst.pts, MinorMode::HRoute).value});
        }
        if (rank_upper_bound(*p, n) < n) base.push_back({"SUPPORT_RANK", field.zero()});
        base.push_back({"ORACLE", det_oracle(*p, inst.pts).value});
    } else {
        const auto& f = std::get<UnivariatePoly<F>>(inst.poly);
        const bool square = !f.is_zero() && n == f.degree() + 1;
        if (square) base.push_back({"SUM_FORM", det_sum_form(f, inst.pts).value});
        base.push_back({"ORACLE", det_oracle(f, inst.pts).value});
        if (inst.linear_change) {
            if (square) {
                transformed.push_back(
                    {"EQUIVARIANT_PREDICTION", predict_equivariant_det(f, *inst.linear_change, inst.pts).predicted});
                transformed.push_back(
                    {"ORACLE", bareiss_det(build_transformed_matrix(f, *inst.linear_change, inst.pts))});
            } else {
                out << "equivariance prediction skipped: needs n = deg f + 1\n";
            }
        }
    }
    if (expect) base.push_back({"EXPECTED", field.parse(*expect)});

    bool ok = report_group("determinant", base, out);
    if (!transformed.empty()) ok = report_group("linear change", transformed, out) && ok;
    out << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kExitOk : kExitVerifyFailed;
}

template <ExactField F>
int cmd_matrix(const InstanceFile& file, const ScalarDomain& d, const F& field, std::ostream& out) {
    const auto inst = materialize(file, field);
    const std::size_t n = inst.pts.size();
    json j = instance_header(d, file, n, inst.degree());
    if (const auto* p = std::get_if<HomogeneousPoly<F>>(&inst.poly)) {
        const auto parts = factorization_parts(*p, inst.pts);
        j["A"] = to_json(build_evaluation_matrix(*p, inst.pts));
        j["factors"] = json{{"V", to_json(parts.V)}, {"D", to_json(parts.D)}, {"W", to_json(parts.W)}};
    } else {
        const auto& f = std::get<UnivariatePoly<F>>(inst.poly);
        // A = E_a C_f E_b^T needs the grid to cover every degree up to deg f
        const std::size_t m = std::max(n, f.degree() + 1);
        j["A"] = to_json(build_evaluation_matrix(f, inst.pts));
        j["factors"] = json{{"E_a", to_json(build_vandermonde_asc(field, inst.pts.a, m - 1))},
                            {"C_f", to_json(expand_sum_form(f, m))},
                            {"E_b", to_json(build_vandermonde_asc(field, inst.pts.b, m - 1))}};
    }
    out << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_ffprob(const FfprobOptions& opt, std::ostream& out) {
    ExperimentConfig cfg;
    cfg.modulus = opt.p;
    cfg.n = opt.n;
    cfg.trials = opt.trials;
    cfg.seed = opt.seed;
    if (!opt.coeffs.empty()) {
        if (opt.k >= 0 && static_cast<std::size_t>(opt.k) + 1 != opt.coeffs.size())
            throw Error(ErrorCode::InvalidConfig, "--k disagrees with the number of --coeffs");
        cfg.coeffs = opt.coeffs;
    } else {
        if (opt.k < 0) throw Error(ErrorCode::InvalidConfig, "give --k or --coeffs");
        cfg.coeffs.assign(static_cast<std::size_t>(opt.k) + 1, 1);
    }
    const auto result = estimate_zero_probability(cfg);
    if (opt.csv) {
        out << csv_header() << "\n" << to_csv(result) << "\n";
    } else {
        out << to_json(result).dump(2) << "\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Determinants of polynomial evaluation matrices over Q and F_p"};
    app.require_subcommand(1);

    CommonOptions common;
    DetOptions det_opt;
    std::optional<std::string> expect;
    FfprobOptions ff;
    BenchConfig bench;
    std::vector<std::size_t> bench_sizes{2, 50, 200};
    std::string bench_domain = "fp:2147483647";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--in", common.in_path, "instance JSON file (default: stdin)");
        sub->add_option("--domain", common.domain, "rational | fp:<p> (overrides the file)");
    };

    auto* det = app.add_subcommand("det", "compute det A with the structured engines");
    add_common(det);
    det->add_option("--method", det_opt.method, "auto | borderline | cauchy-binet | sum-form | oracle")
        ->check(CLI::IsMember({"auto", "borderline", "cauchy-binet", "sum-form", "oracle"}));
    det->add_option("--minor-mode", det_opt.minor_mode, "direct | h-route")
        ->check(CLI::IsMember({"direct", "h-route"}));
    det->add_flag("--show-terms", det_opt.show_terms, "include Cauchy-Binet subset terms");

    auto* verify = app.add_subcommand("verify", "cross-check every applicable engine against the oracle");
    add_common(verify);
    verify->add_option("--expect", expect, "value the determinant must equal");

    auto* matrix = app.add_subcommand("matrix", "print A and its factors");
    add_common(matrix);

    auto* ffprob = app.add_subcommand("ffprob", "random-point zero probability over F_p");
    ffprob->add_option("--p", ff.p, "prime modulus")->required();
    ffprob->add_option("--n", ff.n, "matrix size")->required();
    ffprob->add_option("--k", ff.k, "degree (coefficients default to all ones)");
    ffprob->add_option("--coeffs", ff.coeffs, "alpha_0..alpha_k")->delimiter(',');
    ffprob->add_option("--trials", ff.trials, "number of trials")->required();
    ffprob->add_option("--seed", ff.seed, "RNG seed (default 0)");
    ffprob->add_flag("--csv", ff.csv, "emit the one-line CSV record");

    auto* benchcmd = app.add_subcommand("bench", "time the closed form against elimination (CSV)");
    benchcmd->add_option("--n", bench_sizes, "sizes n = k+1")->delimiter(',');
    benchcmd->add_option("--domain", bench_domain, "rational | fp:<p>");
    benchcmd->add_option("--trials", bench.repetitions, "timing repetitions (median reported)");
    benchcmd->add_option("--seed", bench.seed, "RNG seed (default 0)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (*det || *verify || *matrix) {
            const auto file = load_instance(common, in);
            const auto domain = resolve_domain(common, file);
            return with_field(domain, [&](const auto& field) {
                if (*det) return cmd_det(file, domain, field, det_opt, out);
                if (*verify) return cmd_verify(file, domain, field, expect, out);
                return cmd_matrix(file, domain, field, out);
            });
        }
        if (*ffprob) return cmd_ffprob(ff, out);
        if (*benchcmd) {
            bench.sizes = bench_sizes;
            bench.domain = ScalarDomain::parse(bench_domain);
            err << "seed=" << bench.seed << "\n";
            const auto records = run_bench(bench);
            return write_bench_csv(records, out, err) ? kExitOk : kExitVerifyFailed;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::SizeMismatch ? kExitSize : kExitInput;
    } catch (const std::logic_error& e) {
        err << "verification failure: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitInput;
}

}  // namespace polydet

#include "hupstab/json_io.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hupstab {

using nlohmann::json;

namespace {

json pg_json(const PolyGaussFn& f) {
    json terms = json::array();
    for (const auto& t : f.terms()) {
        terms.push_back({{"coeffs", t.coeffs}, {"beta", t.beta}});
    }
    return {{"terms", terms}};
}

PolyGaussFn pg_parse(const json& j) {
    if (!j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("function spec: missing \"terms\" array");
    std::vector<PolyGaussTerm> terms;
    for (const auto& tj : j["terms"]) {
        PolyGaussTerm t;
        if (!tj.contains("coeffs") || !tj.contains("beta"))
            throw std::invalid_argument("function spec: term needs \"coeffs\" and \"beta\"");
        t.coeffs = tj["coeffs"].get<std::vector<double>>();
        t.beta = tj["beta"].get<double>();
        if (!(t.beta > 0.0))
            throw std::invalid_argument("function spec: beta must be > 0");
        terms.push_back(std::move(t));
    }
    return {std::move(terms), Parity::even};  // parity implied even on input
}

double finite_or_null(double v, json& out, const char* key) {
    if (std::isfinite(v)) out[key] = v; else out[key] = nullptr;
    return v;
}

} // namespace

PolyGaussFn pg_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("function spec: ") + e.what());
    }
    return pg_parse(j);
}

std::string pg_to_json(const PolyGaussFn& f) { return pg_json(f).dump(); }

SeparableFn separable_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("separable spec: ") + e.what());
    }
    SeparableFn s;
    if (!j.contains("dim") || !j.contains("sectors"))
        throw std::invalid_argument("separable spec: needs \"dim\" and \"sectors\"");
    s.ambient_dim = j["dim"].get<int>();
    for (const auto& cj : j["sectors"]) {
        SectorComponent c;
        c.k = cj.at("k").get<int>();
        c.profile = pg_parse(cj.at("profile"));
        c.harmonic_id = cj.value("harmonic", "std");
        s.components.push_back(std::move(c));
    }
    validate_separable(s);
    return s;
}

std::string separable_to_json(const SeparableFn& s) {
    json sectors = json::array();
    for (const auto& c : s.components)
        sectors.push_back({{"k", c.k}, {"profile", pg_json(c.profile)}, {"harmonic", c.harmonic_id}});
    return json{{"dim", s.ambient_dim}, {"sectors", sectors}}.dump();
}

std::string deficit_report_to_json(const DeficitReport& d) {
    json j{{"l2", d.energies.l2},
           {"grad", d.energies.grad},
           {"lap", d.energies.lap},
           {"x2_l2", d.energies.x2_l2},
           {"x2_grad", d.energies.x2_grad},
           {"dim", d.energies.dim},
           {"theta1", d.theta1},
           {"theta2", d.theta2},
           {"theta3", d.theta3},
           {"delta1", d.delta1},
           {"delta2", d.delta2}};
    finite_or_null(d.lambda_first, j, "lambda_first");
    finite_or_null(d.lambda_second, j, "lambda_second");
    return j.dump();
}

const char* metric_name(Metric m) {
    switch (m) {
        case Metric::l2: return "l2";
        case Metric::grad_seminorm: return "grad_seminorm";
        case Metric::grad_seminorm_norm_matched: return "grad_seminorm_norm_matched";
        case Metric::vector_l2: return "vector_l2";
        case Metric::d2_partial: return "d2_partial";
    }
    return "?";
}

const char* check_kind_name(CheckKind k) {
    switch (k) {
        case CheckKind::identity: return "identity";
        case CheckKind::inequality: return "inequality";
        case CheckKind::sharpness: return "sharpness";
    }
    return "?";
}

std::string distance_result_to_json(const DistanceResult& d) {
    return json{{"value_sq", d.value_sq},
                {"alpha_star", d.alpha_star},
                {"beta_star", d.beta_star},
                {"metric", metric_name(d.metric)},
                {"converged", d.converged},
                {"evaluations", d.evaluations}}
        .dump();
}

std::string stability_estimate_to_json(const StabilityEstimate& e) {
    json j{{"N", e.N},
           {"k", e.k},
           {"basis_size", e.basis_size},
           {"scale", e.scale},
           {"lower", e.lower},
           {"upper", e.upper},
           {"gaussian_quotient", e.gaussian_quotient},
           {"converged", e.converged}};
    finite_or_null(e.value, j, "value");
    finite_or_null(e.reference, j, "reference");
    if (!e.diagnostics.empty()) j["diagnostics"] = e.diagnostics;
    if (!e.certificate.empty()) {
        j["certificate"] = e.certificate;
        j["certificate_ok"] = e.certificate_ok;
    }
    return j.dump();
}

std::string verify_report_to_json(const VerifyReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json cj{{"name", c.name},
                {"kind", check_kind_name(c.kind)},
                {"residual", c.residual},
                {"tolerance", c.tolerance},
                {"passed", c.passed},
                {"paper_tag", c.paper_tag}};
        if (c.witness) cj["witness"] = *c.witness;
        checks.push_back(cj);
    }
    return json{{"suite", r.suite},
                {"N", r.N},
                {"seed", r.seed},
                {"corpus_size", r.corpus_size},
                {"checks", checks}}
        .dump();
}

namespace {

void csv_number(std::ostringstream& os, double v) {
    if (std::isfinite(v)) {
        os << json(v).dump();  // shortest round-trip representation
    } else {
        os << "nan";
    }
}

} // namespace

std::string estimates_to_csv(const std::vector<StabilityEstimate>& rows) {
    std::ostringstream os;
    os << "# hupstab-report v1\n";
    os << "N,k,value,lower,upper,gaussian_quotient,reference,converged\n";
    for (const auto& e : rows) {
        os << e.N << ',' << e.k << ',';
        csv_number(os, e.value);
        os << ',';
        csv_number(os, e.lower);
        os << ',';
        csv_number(os, e.upper);
        os << ',';
        csv_number(os, e.gaussian_quotient);
        os << ',';
        csv_number(os, e.reference);
        os << ',' << (e.converged ? "true" : "false") << '\n';
    }
    return os.str();
}

std::string verify_report_to_csv(const VerifyReport& r) {
    std::ostringstream os;
    os << "# hupstab-report v1\n";
    os << "suite,N,seed,name,kind,residual,tolerance,passed\n";
    for (const auto& c : r.checks) {
        os << r.suite << ',' << r.N << ',' << r.seed << ',' << c.name << ','
           << check_kind_name(c.kind) << ',';
        csv_number(os, c.residual);
        os << ',';
        csv_number(os, c.tolerance);
        os << ',' << (c.passed ? "true" : "false") << '\n';
    }
    return os.str();
}

bool VerifyReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

} // namespace hupstab

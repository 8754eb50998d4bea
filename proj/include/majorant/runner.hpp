// Binds theorem names to checker invocations. A CheckRequest carries the
// function specs and scalar inputs of one named check; running it builds the
// series at the requested truncation degree, dispatches, and attaches the
// full witness (specs plus config) to the report so that any Fails can be
// replayed bit-for-bit from its serialized form.

#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "majorant/function_spec.hpp"
#include "majorant/radius.hpp"
#include "majorant/theorems.hpp"

namespace majorant {

inline const std::vector<std::string>& theorem_names() {
    static const std::vector<std::string> names = {
        "bohr",         "rogosinski",       "norm-axioms",
        "schwarz-majorant", "subordination", "general-subordination",
        "quasi-subordination", "von-neumann", "section-powers",
        "section-sup",  "section-majorant", "debranges",
    };
    return names;
}

struct CheckRequest {
    std::string theorem;
    std::map<std::string, FunctionSpec> functions;  // roles: f, h, g, phi, psi
    int k = 0;
    int j = 1;
    double b = 1.0;
    double rho = 1.0;
    double sup_bound = 1.0;
    Complex alpha{1.0, 0.0};
    SectionBoundMode mode = SectionBoundMode::Majorant;

    int degree = kDefaultDegree;
    int samples = 4096;
    double tol = 1e-10;

    const FunctionSpec& role(const std::string& name) const {
        const auto it = functions.find(name);
        if (it == functions.end())
            throw std::invalid_argument("check '" + theorem + "' needs a '" + name + "' function");
        return it->second;
    }

    InequalityReport run(double r) const { return run_at(r, degree, samples); }

    InequalityReport run_at(double r, int at_degree, int at_samples) const {
        const RadiusParam radius(r);
        const CheckOptions opt{tol, at_samples};
        auto built = [&](const std::string& name) { return role(name).build(at_degree); };

        InequalityReport report;
        if (theorem == "bohr") {
            report = check_bohr(built("f"), sup_bound, radius, opt);
        } else if (theorem == "rogosinski") {
            report = check_rogosinski(built("f"), k, radius, opt);
        } else if (theorem == "norm-axioms") {
            report = check_norm_axioms(built("f"), built("g"), alpha, radius, opt);
        } else if (theorem == "schwarz-majorant") {
            report = check_schwarz_majorant(built("phi"), radius, opt);
        } else if (theorem == "subordination") {
            report = check_subordination(built("h"), built("phi"), radius, opt);
        } else if (theorem == "general-subordination") {
            report = check_general_subordination(built("h"), built("g"), built("phi"), b, rho,
                                                 radius, opt);
        } else if (theorem == "quasi-subordination") {
            report = check_quasi_subordination(built("h"), built("psi"), built("phi"), radius, opt);
        } else if (theorem == "von-neumann") {
            report = check_von_neumann_type(built("h"), built("phi"), radius, opt);
        } else if (theorem == "section-powers") {
            report = check_section_powers(built("phi"), j, k, radius, opt);
        } else if (theorem == "section-sup") {
            report = check_section_sup(built("h"), built("phi"), k, radius, opt);
        } else if (theorem == "section-majorant") {
            report = check_section_majorant(built("h"), built("phi"), k, radius, opt);
        } else if (theorem == "debranges") {
            report = check_debranges_bound(built("h"), built("phi"), k, radius, mode, opt);
        } else {
            throw std::invalid_argument("unknown theorem '" + theorem + "'");
        }

        auto specs = nlohmann::json::object();
        for (const auto& [name, spec] : functions)
            specs[name] = spec.to_string();
        report.witness["functions"] = std::move(specs);
        report.witness["config"] =
            nlohmann::json{{"degree", at_degree}, {"samples", at_samples}, {"tol", tol}};
        return report;
    }

    static CheckRequest from_witness(const nlohmann::json& witness) {
        CheckRequest request;
        request.theorem = witness.at("theorem").get<std::string>();
        for (const auto& [name, spec] : witness.at("functions").items())
            request.functions[name] = FunctionSpec::parse(spec.get<std::string>());
        request.k = witness.value("k", 0);
        request.j = witness.value("j", 1);
        request.b = witness.value("b", 1.0);
        request.rho = witness.value("rho", 1.0);
        request.sup_bound = witness.value("sup_bound", 1.0);
        if (witness.contains("alpha"))
            request.alpha = Complex{witness["alpha"].at(0).get<double>(),
                                    witness["alpha"].at(1).get<double>()};
        if (witness.value("mode", "majorant") == std::string("sup"))
            request.mode = SectionBoundMode::Sup;
        if (witness.contains("config")) {
            const auto& config = witness["config"];
            request.degree = config.value("degree", kDefaultDegree);
            request.samples = config.value("samples", 4096);
            request.tol = config.value("tol", 1e-10);
        }
        return request;
    }
};

// The radius searcher rebuilds inputs at each precision level, so a spec
// instantiated at degree 64 re-instantiates at 128/256 up the ladder.
inline RadiusPredicate make_radius_predicate(CheckRequest request) {
    return [request = std::move(request)](double r, const PrecisionLevel& level) {
        return request.run_at(r, level.degree, level.samples);
    };
}

// One-parameter Moebius curve through the given role at a fixed radius.
inline FamilyPredicate make_moebius_family(CheckRequest request, std::string role, double r) {
    return [request = std::move(request), role = std::move(role), r](double a) {
        CheckRequest varied = request;
        FunctionSpec spec;
        spec.kind = FunctionSpec::Kind::Moebius;
        spec.moebius_a = a;
        varied.functions[role] = spec;
        return varied.run(r);
    };
}

}  // namespace majorant

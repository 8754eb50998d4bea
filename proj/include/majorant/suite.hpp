// The seeded verification suite: a fixed number of random (h, phi, psi, f)
// tuples pushed through every theorem checker at its guarantee radii, with
// verdict counts per (theorem, r) and replayable witnesses for any failure.
// All draws derive from one seed, case results land in per-index slots, and
// rows are emitted in canonical order, so the CSV is byte-identical across
// runs regardless of thread count.

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "majorant/function_spec.hpp"
#include "majorant/parallel.hpp"
#include "majorant/rng.hpp"
#include "majorant/runner.hpp"
#include "majorant/theorems.hpp"

namespace majorant {

struct SuiteConfig {
    uint64_t seed = 42;
    int pairs = 500;
    int degree = kDefaultDegree;
    int samples = 4096;
    double tol = 1e-10;
    std::vector<double> extra_radii;
};

struct SuiteRow {
    std::string theorem;
    double r = 0.0;
    long holds = 0;
    long fails = 0;
    long inconclusive = 0;
};

struct SuiteFailure {
    int pair_index = 0;
    InequalityReport report;
};

struct SuiteResult {
    std::vector<SuiteRow> rows;
    std::vector<SuiteFailure> failures;
    long total = 0;
    long fails = 0;
    long inconclusive = 0;
};

// One generated tuple: outer polynomial, Schwarz inner function, unit-bounded
// multiplier, unit-bounded standalone function, and a section index.
struct SuiteCase {
    FunctionSpec h;
    FunctionSpec phi;
    FunctionSpec psi;
    FunctionSpec f;
    int k = 0;
};

inline SuiteCase make_suite_case(uint64_t seed, uint64_t index, int degree) {
    const uint64_t case_seed = derive_seed(seed, index);
    Rng rng(case_seed);

    SuiteCase out;
    const int dh = 1 + rng.below(16);
    out.h.kind = FunctionSpec::Kind::Poly;
    out.h.poly_coeffs.assign(static_cast<size_t>(dh) + 1, Complex{0.0, 0.0});
    for (auto& c : out.h.poly_coeffs)
        c = Complex{2.0 * rng.uniform01() - 1.0, 2.0 * rng.uniform01() - 1.0};
    out.k = rng.below(17);

    // Blaschke draws keep at least one zero and Schur draws at least one free
    // parameter: a bare rotation phi = e^{it} z turns the section-sup checks
    // into exact ties that no sampled bound can certify.
    const bool blaschke_phi = index % 2 == 0;
    out.phi = to_function_spec(sample_spec(derive_seed(case_seed, 1),
                                           blaschke_phi ? SchwarzFamily::Blaschke
                                                        : SchwarzFamily::Schur,
                                           blaschke_phi ? 1 + rng.below(8) : 2 + rng.below(15),
                                           degree, true));
    out.psi = to_function_spec(
        sample_spec(derive_seed(case_seed, 2), SchwarzFamily::Schur, 1 + rng.below(16), degree,
                    false));
    out.f = to_function_spec(sample_spec(derive_seed(case_seed, 3),
                                         blaschke_phi ? SchwarzFamily::Schur
                                                      : SchwarzFamily::Blaschke,
                                         blaschke_phi ? 1 + rng.below(16) : 1 + rng.below(8),
                                         degree, false));
    return out;
}

namespace detail {

struct SuiteCheck {
    std::string theorem;
    std::vector<double> radii;
};

inline std::vector<SuiteCheck> suite_plan(const SuiteConfig& config) {
    const std::vector<double> third_grid{0.05, 0.15, 0.25, 1.0 / 3.0};
    const std::vector<double> half_grid{0.1, 0.3, 0.5};
    std::vector<SuiteCheck> plan = {
        {"bohr", {1.0 / 3.0}},
        {"quasi-subordination", third_grid},
        {"rogosinski", half_grid},
        {"schwarz-majorant", {1.0 / 3.0}},
        {"section-majorant", third_grid},
        {"section-sup", half_grid},
        {"subordination", third_grid},
        {"von-neumann", {0.1, 1.0 / 3.0}},
    };
    for (auto& check : plan)
        for (const double extra : config.extra_radii)
            check.radii.push_back(extra);
    return plan;
}

}  // namespace detail

inline SuiteResult run_suite(const SuiteConfig& config) {
    const auto plan = detail::suite_plan(config);

    struct Slot {
        std::vector<Verdict> verdicts;
        std::vector<SuiteFailure> failures;
    };
    std::vector<Slot> slots(static_cast<size_t>(config.pairs));

    parallel_for(config.pairs, [&](int index) {
        const auto suite_case = make_suite_case(config.seed, static_cast<uint64_t>(index),
                                                config.degree);
        const auto h = suite_case.h.build(config.degree);
        const auto phi = suite_case.phi.build(config.degree);
        const auto psi = suite_case.psi.build(config.degree);
        const auto f = suite_case.f.build(config.degree);

        auto& slot = slots[static_cast<size_t>(index)];
        auto evaluate = [&](const std::string& theorem, double r,
                            int samples) -> InequalityReport {
            const RadiusParam radius(r);
            const CheckOptions opt{config.tol, samples};
            if (theorem == "bohr")
                return check_bohr(f, 1.0, radius, opt);
            if (theorem == "quasi-subordination")
                return check_quasi_subordination(h, psi, phi, radius, opt);
            if (theorem == "rogosinski")
                return check_rogosinski(f, suite_case.k, radius, opt);
            if (theorem == "schwarz-majorant")
                return check_schwarz_majorant(phi, radius, opt);
            if (theorem == "section-majorant")
                return check_section_majorant(h, phi, suite_case.k, radius, opt);
            if (theorem == "section-sup")
                return check_section_sup(h, phi, suite_case.k, radius, opt);
            if (theorem == "subordination")
                return check_subordination(h, phi, radius, opt);
            return check_von_neumann_type(h, phi, radius, opt);
        };

        for (const auto& check : plan) {
            for (const double r : check.radii) {
                auto report = evaluate(check.theorem, r, config.samples);
                if (report.verdict == Verdict::Inconclusive)
                    report = evaluate(check.theorem, r, 4 * config.samples);
                if (report.verdict == Verdict::Fails) {
                    report.witness["functions"] =
                        nlohmann::json{{"h", suite_case.h.to_string()},
                                       {"phi", suite_case.phi.to_string()},
                                       {"psi", suite_case.psi.to_string()},
                                       {"f", suite_case.f.to_string()}};
                    report.witness["config"] = nlohmann::json{{"degree", config.degree},
                                                              {"samples", config.samples},
                                                              {"tol", config.tol},
                                                              {"seed", config.seed},
                                                              {"pair", index}};
                    slot.failures.push_back({index, report});
                }
                slot.verdicts.push_back(report.verdict);
            }
        }
    });

    SuiteResult result;
    std::map<std::pair<std::string, double>, SuiteRow> rows;
    for (int index = 0; index < config.pairs; ++index) {
        const auto& slot = slots[static_cast<size_t>(index)];
        size_t cursor = 0;
        for (const auto& check : plan) {
            for (const double r : check.radii) {
                auto& row = rows[{check.theorem, r}];
                row.theorem = check.theorem;
                row.r = r;
                const Verdict verdict = slot.verdicts.at(cursor++);
                ++result.total;
                switch (verdict) {
                case Verdict::Holds:
                    ++row.holds;
                    break;
                case Verdict::Fails:
                    ++row.fails;
                    ++result.fails;
                    break;
                case Verdict::Inconclusive:
                    ++row.inconclusive;
                    ++result.inconclusive;
                    break;
                }
            }
        }
        for (const auto& failure : slot.failures)
            if (result.failures.size() < 32)
                result.failures.push_back(failure);
    }
    result.rows.reserve(rows.size());
    for (auto& [key, row] : rows)
        result.rows.push_back(std::move(row));
    return result;
}

// Fixed CSV schema, version 1: theorem,r,holds,fails,inconclusive.
inline std::string suite_csv(const SuiteResult& result) {
    std::string out = "theorem,r,holds,fails,inconclusive\n";
    for (const auto& row : result.rows) {
        out += row.theorem;
        out += ',';
        out += format_double(row.r);
        out += ',';
        out += std::to_string(row.holds);
        out += ',';
        out += std::to_string(row.fails);
        out += ',';
        out += std::to_string(row.inconclusive);
        out += '\n';
    }
    return out;
}

}  // namespace majorant

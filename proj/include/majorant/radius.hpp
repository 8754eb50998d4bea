// Locates the validity radius of an inequality predicate: a grid scan finds
// the first certified failure, then two one-sided bisections tighten the
// bracket. The Holds side and the Fails side are bisected separately because
// verdicts near the crossing are legitimately Inconclusive (the certified
// margin shrinks below tol there); a single bisection would stall on them.
//
// Inconclusive grid points are retried up the precision ladder (larger
// truncation degree, more circle samples) before the scan gives up on them.

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <json.hpp>

#include "majorant/theorems.hpp"

namespace majorant {

struct PrecisionLevel {
    int degree = 64;
    int samples = 4096;
};

// Deterministic escalation order for Inconclusive verdicts.
inline const std::vector<PrecisionLevel>& precision_ladder() {
    static const std::vector<PrecisionLevel> ladder = {
        {64, 4096}, {128, 4096}, {256, 4096}, {64, 16384}, {128, 16384}, {256, 16384},
    };
    return ladder;
}

// A theorem check with everything fixed except the radius; the precision
// level tells the closure which truncation degree and sample count to
// rebuild its inputs with.
using RadiusPredicate = std::function<InequalityReport(double r, const PrecisionLevel&)>;

struct RadiusSearchConfig {
    double r_max = 0.95;
    int grid = 256;
    double bisect_tol = 1e-9;
};

struct RadiusResult {
    // Bracket of the first failure radius: no failure is certified at or
    // below radius_low, and a failure is certified at radius_high.
    double radius_low = 0.0;
    double radius_high = 1.0;
    bool never_fails = false;
    long evaluations = 0;
    std::optional<nlohmann::json> first_failure_witness;
};

inline void to_json(nlohmann::json& j, const RadiusResult& result) {
    j = nlohmann::json{{"radius_low", result.radius_low},
                       {"radius_high", result.radius_high},
                       {"never_fails", result.never_fails},
                       {"evaluations", result.evaluations}};
    if (result.first_failure_witness)
        j["first_failure_witness"] = *result.first_failure_witness;
}

namespace detail {

struct LadderEval {
    Verdict verdict;
    InequalityReport report;
};

inline LadderEval evaluate_with_ladder(const RadiusPredicate& predicate, double r,
                                       long& evaluations) {
    InequalityReport report;
    for (const PrecisionLevel& level : precision_ladder()) {
        report = predicate(r, level);
        ++evaluations;
        if (report.verdict != Verdict::Inconclusive)
            break;
    }
    return {report.verdict, std::move(report)};
}

}  // namespace detail

inline RadiusResult validity_radius(const RadiusPredicate& predicate,
                                    const RadiusSearchConfig& config = {}) {
    if (config.grid < 16)
        throw ParameterOutOfRange("validity_radius: grid must be at least 16");
    RadiusResult result;

    // Scan left to right for the first certified failure, remembering the
    // last certified Holds before it.
    std::optional<double> anchor;
    std::optional<double> first_fail;
    InequalityReport fail_report;
    for (int i = 1; i <= config.grid; ++i) {
        const double r = config.r_max * i / config.grid;
        auto eval = detail::evaluate_with_ladder(predicate, r, result.evaluations);
        if (eval.verdict == Verdict::Fails) {
            first_fail = r;
            fail_report = std::move(eval.report);
            break;
        }
        if (eval.verdict == Verdict::Holds)
            anchor = r;
    }

    if (!first_fail) {
        result.never_fails = true;
        result.radius_low = anchor.value_or(0.0);
        result.radius_high = 1.0;
        return result;
    }
    if (!anchor) {
        auto at_zero = detail::evaluate_with_ladder(predicate, 0.0, result.evaluations);
        if (at_zero.verdict != Verdict::Holds)
            throw BudgetExhausted(
                "validity_radius: no certified Holds anchor below the first failure");
        anchor = 0.0;
    }

    // Largest certified Holds in [anchor, first_fail].
    double holds_lo = *anchor;
    double holds_hi = *first_fail;
    while (holds_hi - holds_lo > config.bisect_tol) {
        const double mid = 0.5 * (holds_lo + holds_hi);
        if (detail::evaluate_with_ladder(predicate, mid, result.evaluations).verdict ==
            Verdict::Holds)
            holds_lo = mid;
        else
            holds_hi = mid;
    }

    // Smallest certified Fails in [anchor, first_fail].
    double fails_lo = *anchor;
    double fails_hi = *first_fail;
    while (fails_hi - fails_lo > config.bisect_tol) {
        const double mid = 0.5 * (fails_lo + fails_hi);
        auto eval = detail::evaluate_with_ladder(predicate, mid, result.evaluations);
        if (eval.verdict == Verdict::Fails) {
            fails_hi = mid;
            fail_report = std::move(eval.report);
        } else {
            fails_lo = mid;
        }
    }

    result.radius_low = std::min(holds_lo, fails_hi);
    result.radius_high = fails_hi;
    result.first_failure_witness = nlohmann::json(fail_report);
    return result;
}

struct SharpnessWitness {
    double parameter = 0.0;
    InequalityReport report;
};

// One-parameter family of check inputs, evaluated at a fixed radius.
using FamilyPredicate = std::function<InequalityReport(double parameter)>;

struct SharpnessSearchConfig {
    double param_lo = 0.0;
    double param_hi = 1.0 - 1e-6;
    int param_grid = 20;
};

// First parameter on the ascending grid whose report is a certified Fails.
inline std::optional<SharpnessWitness> sharpness_search(const FamilyPredicate& family,
                                                        const SharpnessSearchConfig& config = {}) {
    for (int i = 0; i <= config.param_grid; ++i) {
        const double parameter =
            config.param_lo + (config.param_hi - config.param_lo) * i / config.param_grid;
        auto report = family(parameter);
        if (report.verdict == Verdict::Fails)
            return SharpnessWitness{parameter, std::move(report)};
    }
    return std::nullopt;
}

}  // namespace majorant

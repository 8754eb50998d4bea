// One predicate per coefficient-majorant statement. Every checker evaluates
// both sides of its inequality with certified values and classifies the
// outcome soundly: Holds needs lhs.upper <= rhs.lower + tol, Fails needs
// lhs.lower > rhs.upper + tol, anything else is Inconclusive. A near-tie is
// never rounded into a verdict.
//
// Truncated inputs are treated as the functions they are (polynomials), so
// subordination-type checks compare exact finite sums and need no tail
// allowance: compositions run at the inner function's truncation degree,
// where every retained coefficient of h(phi) is exact because phi(0) = 0.
// Only the Bohr and Schwarz-majorant checks, which quantify over genuinely
// infinite series, carry a truncation tail in their bracket.

#pragma once

#include <cmath>
#include <complex>
#include <string>

#include <json.hpp>

#include "majorant/bohr.hpp"
#include "majorant/errors.hpp"
#include "majorant/schwarz.hpp"
#include "majorant/series.hpp"

namespace majorant {

enum class Verdict { Holds, Fails, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Holds:
        return "holds";
    case Verdict::Fails:
        return "fails";
    default:
        return "inconclusive";
    }
}

inline Verdict verdict_from_string(const std::string& s) {
    if (s == "holds")
        return Verdict::Holds;
    if (s == "fails")
        return Verdict::Fails;
    if (s == "inconclusive")
        return Verdict::Inconclusive;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

struct CheckOptions {
    double tol = 1e-10;
    int samples = 4096;
};

// Sub-check tolerance for the norm axioms, which compare exact finite sums.
inline constexpr double kAxiomTol = 1e-12;

struct InequalityReport {
    Verdict verdict = Verdict::Inconclusive;
    CertifiedValue lhs;
    CertifiedValue rhs;
    double margin = 0.0;
    double tol = 0.0;
    nlohmann::json witness;
};

inline Verdict classify(const CertifiedValue& lhs, const CertifiedValue& rhs, double tol) {
    if (!lhs.unbounded && !rhs.unbounded && lhs.upper <= rhs.lower + tol)
        return Verdict::Holds;
    if (!rhs.unbounded && lhs.lower > rhs.upper + tol)
        return Verdict::Fails;
    return Verdict::Inconclusive;
}

inline double certified_margin(Verdict v, const CertifiedValue& lhs, const CertifiedValue& rhs) {
    if (v == Verdict::Fails)
        return lhs.lower - rhs.upper;
    return rhs.lower - (lhs.unbounded ? lhs.lower : lhs.upper);
}

inline InequalityReport make_report(const CertifiedValue& lhs, const CertifiedValue& rhs,
                                    double tol, nlohmann::json witness) {
    InequalityReport report;
    report.verdict = classify(lhs, rhs, tol);
    report.lhs = lhs;
    report.rhs = rhs;
    report.margin = certified_margin(report.verdict, lhs, rhs);
    report.tol = tol;
    report.witness = std::move(witness);
    return report;
}

namespace detail {

inline void require_schwarz(const TruncatedSeries& phi) {
    if (!validate_schwarz(phi))
        throw InvalidSchwarz("inner function failed Schwarz validation");
}

// h(phi) at the common truncation degree. Coefficients up to deg phi are
// exact; requiring deg h <= deg phi keeps the finite power sum complete.
inline TruncatedSeries compose_truncated(const TruncatedSeries& h, const TruncatedSeries& phi) {
    if (h.degree() > phi.degree())
        throw ParameterOutOfRange("outer polynomial degree exceeds the truncation degree");
    return compose(h, phi, phi.degree());
}

// Sections past the truncation degree would silently drop nonzero
// coefficients of the composed polynomial.
inline void require_section_within(int k, const TruncatedSeries& phi) {
    if (k > phi.degree())
        throw ParameterOutOfRange("section index exceeds the truncation degree");
}

}  // namespace detail

// Bohr inequality: sum |a_n| r^n <= sup_bound, guaranteed for r <= 1/3 when
// |f| <= sup_bound on the disk.
inline InequalityReport check_bohr(const TruncatedSeries& f, double sup_bound, RadiusParam r,
                                   const CheckOptions& opt = {}) {
    const auto lhs = bohr_value(f, r, sup_bound);
    const auto rhs = CertifiedValue::exact(sup_bound);
    return make_report(lhs, rhs, opt.tol,
                       {{"theorem", "bohr"}, {"r", r.r}, {"sup_bound", sup_bound}});
}

// Rogosinski inequality: |s_k(f)| <= 1 on |z| = r, guaranteed for r <= 1/2
// when |f| <= 1 on the disk.
inline InequalityReport check_rogosinski(const TruncatedSeries& f, int k, RadiusParam r,
                                         const CheckOptions& opt = {}) {
    const auto lhs = sup_on_circle(section(f, k), r.r, opt.samples);
    const auto rhs = CertifiedValue::exact(1.0);
    return make_report(lhs, rhs, opt.tol,
                       {{"theorem", "rogosinski"}, {"r", r.r}, {"k", k}, {"samples", opt.samples}});
}

// Norm axioms of M_r: positivity/definiteness, subadditivity, absolute
// homogeneity, submultiplicativity, unit. All five compare exact finite
// sums at kAxiomTol.
inline InequalityReport check_norm_axioms(const TruncatedSeries& f, const TruncatedSeries& g,
                                          Complex alpha, RadiusParam r,
                                          const CheckOptions& opt = {}) {
    (void)opt;
    const double mf = finite_majorant_sum(f, r.r);
    const double mg = finite_majorant_sum(g, r.r);

    bool all_zero = true;
    for (int n = 0; n <= f.degree(); ++n)
        if (f.coeff(n) != Complex{0.0, 0.0})
            all_zero = false;

    struct Axiom {
        const char* name;
        double lhs;
        double rhs;
    };
    const Axiom axioms[] = {
        {"positivity", 0.0, mf},
        {"definiteness", all_zero ? mf : (mf == 0.0 ? 1.0 : 0.0), 0.0},
        {"subadditivity", finite_majorant_sum(add(f, g), r.r), mf + mg},
        {"homogeneity", std::abs(finite_majorant_sum(scale(f, alpha), r.r) - std::abs(alpha) * mf),
         0.0},
        {"submultiplicativity", finite_majorant_sum(mul(f, g, f.degree() + g.degree()), r.r),
         mf * mg},
        {"unit", std::abs(finite_majorant_sum(TruncatedSeries::one(), r.r) - 1.0), 0.0},
    };

    double worst_violation = -1.0;
    const Axiom* worst = &axioms[0];
    auto sub_reports = nlohmann::json::array();
    for (const Axiom& axiom : axioms) {
        const double violation = axiom.lhs - axiom.rhs;
        sub_reports.push_back({{"axiom", axiom.name},
                               {"lhs", axiom.lhs},
                               {"rhs", axiom.rhs},
                               {"pass", violation <= kAxiomTol}});
        if (violation > worst_violation) {
            worst_violation = violation;
            worst = &axiom;
        }
    }
    return make_report(CertifiedValue::exact(worst->lhs), CertifiedValue::exact(worst->rhs),
                       kAxiomTol,
                       {{"theorem", "norm-axioms"},
                        {"r", r.r},
                        {"alpha", {alpha.real(), alpha.imag()}},
                        {"subchecks", std::move(sub_reports)}});
}

// Majorant bound for Schwarz functions: M_r(phi) <= r, guaranteed for
// r <= 1/3.
inline InequalityReport check_schwarz_majorant(const TruncatedSeries& phi, RadiusParam r,
                                               const CheckOptions& opt = {}) {
    detail::require_schwarz(phi);
    const auto lhs = bohr_value(phi, r, 1.0);
    const auto rhs = CertifiedValue::exact(r.r);
    return make_report(lhs, rhs, opt.tol, {{"theorem", "schwarz-majorant"}, {"r", r.r}});
}

// Subordination: M_r(h(phi)) <= M_r(h), guaranteed for r <= 1/3.
inline InequalityReport check_subordination(const TruncatedSeries& h, const TruncatedSeries& phi,
                                            RadiusParam r, const CheckOptions& opt = {}) {
    detail::require_schwarz(phi);
    const auto f = detail::compose_truncated(h, phi);
    const auto lhs = CertifiedValue::exact(finite_majorant_sum(f, r.r));
    const auto rhs = CertifiedValue::exact(finite_majorant_sum(h, r.r));
    return make_report(lhs, rhs, opt.tol, {{"theorem", "subordination"}, {"r", r.r}});
}

// Weighted composition: M_r(g * h(phi)) <= b M_r(h), guaranteed for
// r <= rho/3 when |g| <= b on the disk of radius rho <= 1.
inline InequalityReport check_general_subordination(const TruncatedSeries& h,
                                                    const TruncatedSeries& g,
                                                    const TruncatedSeries& phi, double b,
                                                    double rho, RadiusParam r,
                                                    const CheckOptions& opt = {}) {
    if (!(rho > 0.0) || rho > 1.0)
        throw ParameterOutOfRange("general subordination: rho must lie in (0, 1]");
    if (!(b > 0.0))
        throw ParameterOutOfRange("general subordination: bound b must be positive");
    detail::require_schwarz(phi);
    const auto composed = detail::compose_truncated(h, phi);
    const auto f = mul(g, composed, std::max(g.degree(), composed.degree()));
    const auto lhs = CertifiedValue::exact(finite_majorant_sum(f, r.r));
    const auto rhs = CertifiedValue::exact(b * finite_majorant_sum(h, r.r));
    return make_report(lhs, rhs, opt.tol,
                       {{"theorem", "general-subordination"}, {"r", r.r}, {"b", b}, {"rho", rho}});
}

// Quasi-subordination: the b = 1, rho = 1 case of the weighted bound,
// guaranteed for r <= 1/3 when |psi| <= 1 on the disk.
inline InequalityReport check_quasi_subordination(const TruncatedSeries& h,
                                                  const TruncatedSeries& psi,
                                                  const TruncatedSeries& phi, RadiusParam r,
                                                  const CheckOptions& opt = {}) {
    auto report = check_general_subordination(h, psi, phi, 1.0, 1.0, r, opt);
    report.witness["theorem"] = "quasi-subordination";
    report.witness.erase("b");
    report.witness.erase("rho");
    return report;
}

// von Neumann-type inequality: M_r(h(phi)) <= ||h||_inf, guaranteed for
// r <= 1/3. The rhs bracket comes from sampling h on the unit circle, so
// Holds certifies against a true lower bound of the sup norm.
inline InequalityReport check_von_neumann_type(const TruncatedSeries& h,
                                               const TruncatedSeries& phi, RadiusParam r,
                                               const CheckOptions& opt = {}) {
    detail::require_schwarz(phi);
    const auto f = detail::compose_truncated(h, phi);
    const auto lhs = CertifiedValue::exact(finite_majorant_sum(f, r.r));
    const auto rhs = sup_on_circle(h, 1.0, opt.samples);
    return make_report(lhs, rhs, opt.tol,
                       {{"theorem", "von-neumann"}, {"r", r.r}, {"samples", opt.samples}});
}

// Sections of Schwarz powers. Two sub-verdicts:
//   (A) sup_{|z|=r} |s_k(phi^j)| <= r^j, guaranteed for r <= 1/2;
//   (B) M_r(s_k(phi^j)) <= r^j, guaranteed for r <= 1/3.
// The top-level verdict conjoins the sub-checks whose guarantee window
// contains r; past both windows it conjoins both as reported information.
inline InequalityReport check_section_powers(const TruncatedSeries& phi, int j, int k,
                                             RadiusParam r, const CheckOptions& opt = {}) {
    if (j < 1)
        throw ParameterOutOfRange("section powers: exponent must be >= 1");
    detail::require_section_within(k, phi);
    detail::require_schwarz(phi);
    const auto powered = pow_series(phi, j, phi.degree());
    const auto sec = section(powered, k);
    const auto rhs = CertifiedValue::exact(power_iter(r.r, j));

    const auto sup_lhs = sup_on_circle(sec, r.r, opt.samples);
    const Verdict sup_verdict = classify(sup_lhs, rhs, opt.tol);
    const auto maj_lhs = CertifiedValue::exact(finite_majorant_sum(sec, r.r));
    const Verdict maj_verdict = classify(maj_lhs, rhs, opt.tol);

    const bool sup_applicable = r.r <= 0.5;
    const bool maj_applicable = r.r <= 1.0 / 3.0;

    struct Part {
        Verdict verdict;
        const CertifiedValue* lhs;
    };
    std::vector<Part> considered;
    if (sup_applicable)
        considered.push_back({sup_verdict, &sup_lhs});
    if (maj_applicable)
        considered.push_back({maj_verdict, &maj_lhs});
    if (considered.empty()) {
        // Past both guarantee windows; report the conjunction anyway.
        considered.push_back({sup_verdict, &sup_lhs});
        considered.push_back({maj_verdict, &maj_lhs});
    }
    Verdict combined = Verdict::Holds;
    const CertifiedValue* lhs = considered.front().lhs;
    double binding_margin = certified_margin(considered.front().verdict, *lhs, rhs);
    for (const Part& part : considered) {
        if (part.verdict == Verdict::Fails)
            combined = Verdict::Fails;
        else if (part.verdict == Verdict::Inconclusive && combined == Verdict::Holds)
            combined = Verdict::Inconclusive;
        const double margin = certified_margin(part.verdict, *part.lhs, rhs);
        if (margin < binding_margin || part.verdict == Verdict::Fails) {
            binding_margin = margin;
            lhs = part.lhs;
        }
    }

    InequalityReport report;
    report.verdict = combined;
    report.lhs = *lhs;
    report.rhs = rhs;
    report.margin = certified_margin(combined, *lhs, rhs);
    report.tol = opt.tol;
    report.witness = {{"theorem", "section-powers"},
                      {"r", r.r},
                      {"j", j},
                      {"k", k},
                      {"samples", opt.samples},
                      {"sup_verdict", to_string(sup_verdict)},
                      {"majorant_verdict", to_string(maj_verdict)},
                      {"sup_applicable", sup_applicable},
                      {"majorant_applicable", maj_applicable}};
    return report;
}

// Section sup under subordination: sup |s_k(h(phi))| <= M_r(s_k(h)),
// guaranteed for r <= 1/2.
inline InequalityReport check_section_sup(const TruncatedSeries& h, const TruncatedSeries& phi,
                                          int k, RadiusParam r, const CheckOptions& opt = {}) {
    detail::require_section_within(k, phi);
    detail::require_schwarz(phi);
    const auto sec = section(detail::compose_truncated(h, phi), k);
    const auto lhs = sup_on_circle(sec, r.r, opt.samples);
    const auto rhs = CertifiedValue::exact(finite_majorant_sum(section(h, k), r.r));
    return make_report(lhs, rhs, opt.tol,
                       {{"theorem", "section-sup"}, {"r", r.r}, {"k", k}, {"samples", opt.samples}});
}

// Section majorant under subordination: M_r(s_k(h(phi))) <= M_r(s_k(h)),
// guaranteed for r <= 1/3.
inline InequalityReport check_section_majorant(const TruncatedSeries& h,
                                               const TruncatedSeries& phi, int k, RadiusParam r,
                                               const CheckOptions& opt = {}) {
    detail::require_section_within(k, phi);
    detail::require_schwarz(phi);
    const auto sec = section(detail::compose_truncated(h, phi), k);
    const auto lhs = CertifiedValue::exact(finite_majorant_sum(sec, r.r));
    const auto rhs = CertifiedValue::exact(finite_majorant_sum(section(h, k), r.r));
    return make_report(lhs, rhs, opt.tol,
                       {{"theorem", "section-majorant"}, {"r", r.r}, {"k", k}});
}

// z / (1 - e^{i theta} z)^2 truncated: coefficient n is n e^{i(n-1) theta}.
inline TruncatedSeries koebe_series(double theta, int degree) {
    std::vector<Complex> coeffs(static_cast<size_t>(degree) + 1);
    for (int n = 1; n <= degree; ++n)
        coeffs[static_cast<size_t>(n)] =
            static_cast<double>(n) * std::polar(1.0, (n - 1) * theta);
    return TruncatedSeries(std::move(coeffs));
}

// Whether h is a truncation of lambda z / (1 - w z)^2 with |w| = 1: the
// shipped univalent witness family, whose coefficients satisfy
// |b_n| = n |b_1|.
inline bool is_koebe_rotation(const TruncatedSeries& h, double tol = 1e-9) {
    if (h.degree() < 1)
        return false;
    if (std::abs(h.coeff(0)) > tol)
        return false;
    const Complex b1 = h.coeff(1);
    if (std::abs(b1) <= tol)
        return false;
    Complex w{1.0, 0.0};
    if (h.degree() >= 2) {
        w = h.coeff(2) / (2.0 * b1);
        if (std::abs(std::abs(w) - 1.0) > tol)
            return false;
    }
    Complex w_power{1.0, 0.0};
    for (int n = 1; n <= h.degree(); ++n) {
        if (std::abs(h.coeff(n) - static_cast<double>(n) * b1 * w_power) > tol * (n + 1))
            return false;
        w_power *= w;
    }
    return true;
}

enum class SectionBoundMode { Sup, Majorant };

// Growth bound for sections under subordination to a univalent h:
// |s_k(h(phi))| (sup mode, r <= 1/2) or M_r(s_k(h(phi))) (majorant mode,
// r <= 1/3) is bounded by |b_0| + k(k+1)/2 |b_1|. The coefficient bound
// |b_n| <= n |b_1| is assumed, so h must be one of the shipped witnesses.
inline InequalityReport check_debranges_bound(const TruncatedSeries& h, const TruncatedSeries& phi,
                                              int k, RadiusParam r, SectionBoundMode mode,
                                              const CheckOptions& opt = {}) {
    if (!is_koebe_rotation(h))
        throw NotAUnivalentWitness("h is not a shipped univalent witness (Koebe rotations only)");
    if (k < 0)
        throw ParameterOutOfRange("de Branges bound: section index must be >= 0");
    detail::require_section_within(k, phi);
    detail::require_schwarz(phi);
    const double rhs_value =
        std::abs(h.coeff(0)) + 0.5 * static_cast<double>(k) * (k + 1) * std::abs(h.coeff(1));
    const auto rhs = CertifiedValue::exact(rhs_value);
    const auto sec = section(detail::compose_truncated(h, phi), k);
    const auto lhs = mode == SectionBoundMode::Sup
                         ? sup_on_circle(sec, r.r, opt.samples)
                         : CertifiedValue::exact(finite_majorant_sum(sec, r.r));
    return make_report(lhs, rhs, opt.tol,
                       {{"theorem", "debranges"},
                        {"r", r.r},
                        {"k", k},
                        {"mode", mode == SectionBoundMode::Sup ? "sup" : "majorant"},
                        {"samples", opt.samples}});
}

inline void to_json(nlohmann::json& j, const InequalityReport& report) {
    j = nlohmann::json{{"verdict", to_string(report.verdict)}, {"lhs", report.lhs},
                       {"rhs", report.rhs},                    {"margin", report.margin},
                       {"tol", report.tol},                    {"witness", report.witness}};
}

inline void from_json(const nlohmann::json& j, InequalityReport& report) {
    report.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    report.lhs = j.at("lhs").get<CertifiedValue>();
    report.rhs = j.at("rhs").get<CertifiedValue>();
    report.margin = j.at("margin").get<double>();
    report.tol = j.at("tol").get<double>();
    report.witness = j.value("witness", nlohmann::json::object());
}

}  // namespace majorant

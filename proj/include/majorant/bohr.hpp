// The Bohr operator M_r(f) = sum |a_n| r^n with certified brackets, the
// associated majorant series, and certified sup-norm estimates of
// polynomials on circles.
//
// The finite sum over the stored coefficients is always a true lower bound.
// A two-sided bracket needs a sup bound M for |f| on the unit disk: the
// Cauchy estimate |a_n| <= M turns the missing tail into M r^{N+1}/(1-r).

#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include <json.hpp>

#include "majorant/errors.hpp"
#include "majorant/series.hpp"

namespace majorant {

struct CertifiedValue {
    double lower = 0.0;
    double upper = 0.0;
    bool unbounded = false;

    static CertifiedValue exact(double v) { return {v, v, false}; }

    static CertifiedValue interval(double lo, double hi) {
        if (!(lo <= hi))
            throw std::invalid_argument("CertifiedValue: lower must not exceed upper");
        return {lo, hi, false};
    }

    static CertifiedValue lower_only(double lo) {
        return {lo, std::numeric_limits<double>::infinity(), true};
    }

    double width() const { return upper - lower; }
};

// A circle/disk radius strictly inside the unit disk.
struct RadiusParam {
    double r;

    explicit RadiusParam(double value) : r(value) {
        if (!(value >= 0.0) || value >= 1.0)
            throw RadiusOutOfRange("radius must lie in [0, 1)");
    }
};

// r^j by repeated multiplication. Exact-equality tests rely on every module
// computing small powers through this same fold.
inline double power_iter(double r, int j) {
    double p = 1.0;
    for (int i = 0; i < j; ++i)
        p *= r;
    return p;
}

// Exact finite sum over the stored coefficients, ascending degree.
inline double finite_majorant_sum(const TruncatedSeries& f, double r) {
    double acc = 0.0;
    double p = 1.0;
    for (int n = 0; n <= f.degree(); ++n) {
        acc += std::abs(f.coeff(n)) * p;
        p *= r;
    }
    return acc;
}

// M sum_{n > N} r^n = M r^{N+1} / (1 - r), the tail allowance for a function
// bounded by M on the unit disk and truncated at degree N.
inline double truncation_tail_bound(double sup_bound, double r, int degree) {
    return sup_bound * power_iter(r, degree + 1) / (1.0 - r);
}

inline CertifiedValue bohr_value(const TruncatedSeries& f, RadiusParam r,
                                 std::optional<double> sup_bound = std::nullopt) {
    const double lower = finite_majorant_sum(f, r.r);
    if (!sup_bound)
        return CertifiedValue::lower_only(lower);
    return CertifiedValue::interval(lower, lower + truncation_tail_bound(*sup_bound, r.r, f.degree()));
}

// Series with coefficients |a_n|; evaluating it at z = r recovers the finite
// Bohr sum.
inline TruncatedSeries majorant(const TruncatedSeries& f) {
    std::vector<Complex> coeffs(static_cast<size_t>(f.degree()) + 1);
    for (int n = 0; n <= f.degree(); ++n)
        coeffs[static_cast<size_t>(n)] = Complex{std::abs(f.coeff(n)), 0.0};
    return TruncatedSeries(std::move(coeffs));
}

// sum_{n>=1} n |a_n| r^{n-1}, a bound for |p'| on the circle |z| = r.
inline double derivative_majorant_sum(const TruncatedSeries& p, double r) {
    double acc = 0.0;
    double power = 1.0;
    for (int n = 1; n <= p.degree(); ++n) {
        acc += static_cast<double>(n) * std::abs(p.coeff(n)) * power;
        power *= r;
    }
    return acc;
}

// Certified bracket for sup |p(z)| on |z| = r, the polynomial being exact.
// The lower bound is a sampled maximum over m equispaced points; the upper
// bound adds the Lipschitz correction L * (pi r / m), where pi r / m is the
// arc distance from any circle point to its nearest sample. Accepts r = 1
// (the polynomial is continuous on the closed disk).
inline CertifiedValue sup_on_circle(const TruncatedSeries& p, double r, int samples = 4096) {
    if (!(r >= 0.0) || r > 1.0)
        throw RadiusOutOfRange("sup_on_circle: circle radius must lie in [0, 1]");
    if (samples < 64)
        throw ParameterOutOfRange("sup_on_circle: needs at least 64 samples");
    double best = 0.0;
    const double step = 2.0 * std::numbers::pi_v<double> / samples;
    for (int j = 0; j < samples; ++j) {
        const double theta = step * j;
        best = std::max(best, std::abs(p.eval(std::polar(r, theta))));
    }
    const double correction =
        derivative_majorant_sum(p, r) * (std::numbers::pi_v<double> * r / samples);
    return CertifiedValue::interval(best, best + correction);
}

inline void to_json(nlohmann::json& j, const CertifiedValue& v) {
    if (v.unbounded)
        j = nlohmann::json{{"lower", v.lower}, {"unbounded", true}};
    else
        j = nlohmann::json{{"lower", v.lower}, {"upper", v.upper}};
}

inline void from_json(const nlohmann::json& j, CertifiedValue& v) {
    if (j.value("unbounded", false))
        v = CertifiedValue::lower_only(j.at("lower").get<double>());
    else
        v = CertifiedValue::interval(j.at("lower").get<double>(), j.at("upper").get<double>());
}

}  // namespace majorant

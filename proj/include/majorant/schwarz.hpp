// Constructive generators for Schwarz functions (phi(0) = 0, |phi| <= 1) and
// unit-bounded analytic functions: the extremal Moebius family, finite
// Blaschke products, and the backward Schur-parameter recursion, plus seeded
// random sampling of each family.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "majorant/bohr.hpp"
#include "majorant/errors.hpp"
#include "majorant/rng.hpp"
#include "majorant/series.hpp"

namespace majorant {

inline constexpr int kDefaultDegree = 64;

// (a - z)/(1 - a z) for a in [0, 1): unit-bounded, and the classical witness
// family for the sharpness of the 1/3 radius. Coefficients follow the
// recurrence c_1 = -(1 - a^2), c_{n+1} = a c_n.
inline TruncatedSeries moebius_series(double a, int degree) {
    if (!(a >= 0.0) || a >= 1.0)
        throw ParameterOutOfRange("moebius_series: parameter must lie in [0, 1)");
    std::vector<Complex> coeffs(static_cast<size_t>(degree) + 1);
    coeffs[0] = Complex{a, 0.0};
    if (degree >= 1) {
        coeffs[1] = Complex{-(1.0 - a * a), 0.0};
        for (int n = 1; n < degree; ++n)
            coeffs[static_cast<size_t>(n) + 1] = a * coeffs[static_cast<size_t>(n)];
    }
    return TruncatedSeries(std::move(coeffs));
}

// e^{i theta} z prod_i (zero_i - z)/(1 - conj(zero_i) z), truncated at the
// given degree. The leading z factor keeps the constant term exactly zero.
inline TruncatedSeries blaschke_schwarz(const std::vector<Complex>& zeros, double rotation,
                                        int degree) {
    for (const Complex& zero : zeros)
        if (!(std::abs(zero) < 1.0))
            throw ParameterOutOfRange("blaschke_schwarz: zeros must lie in the open unit disk");
    auto out = TruncatedSeries::zero(degree);
    if (degree >= 1) {
        out = add(out, scale(TruncatedSeries::monomial(1), std::polar(1.0, rotation)));
        for (const Complex& zero : zeros) {
            const TruncatedSeries numer({zero, Complex{-1.0, 0.0}});
            const TruncatedSeries denom({Complex{1.0, 0.0}, -std::conj(zero)});
            out = mul(mul(out, numer, degree), reciprocal(denom, degree), degree);
        }
    }
    return out;
}

// Backward Schur recursion: f = gamma_m, then
// f <- (gamma_k + z f) / (1 + conj(gamma_k) z f) for k = m-1 .. 0.
// With all |gamma_k| <= 1 the result is unit-bounded on the disk.
inline TruncatedSeries schur_series(const std::vector<Complex>& gammas, int degree) {
    if (gammas.empty())
        throw ParameterOutOfRange("schur_series: needs at least one parameter");
    for (const Complex& gamma : gammas)
        if (std::abs(gamma) > 1.0)
            throw ParameterOutOfRange("schur_series: parameters must lie in the closed unit disk");
    auto f = TruncatedSeries::constant(gammas.back(), degree);
    for (size_t k = gammas.size() - 1; k-- > 0;) {
        const auto zf = mul_z(f, degree);
        const auto numer = add(TruncatedSeries::constant(gammas[k], degree), zf);
        const auto denom = add(TruncatedSeries::one(degree), scale(zf, std::conj(gammas[k])));
        f = mul(numer, reciprocal(denom, degree), degree);
    }
    return f;
}

// Necessary-condition backstop for "phi is a Schwarz function": the constant
// term must vanish exactly, every coefficient must obey the Cauchy estimate
// |c_n| <= 1 + tol, and on each probe circle the certified lower bound for
// sup |phi| minus the truncation allowance r^{N+1}/(1-r) must not exceed
// 1 + tol. The circle test rejects only on certified violations: the
// allowance at r = 0.99 is far too large to certify acceptance at practical
// degrees, so demanding a certified sup <= 1 + tol there would reject
// genuine Schwarz functions. 256 samples suffice for a lower bound.
inline bool validate_schwarz(const TruncatedSeries& phi, double tol = 1e-9) {
    if (phi.coeff(0) != Complex{0.0, 0.0})
        return false;
    for (int n = 1; n <= phi.degree(); ++n)
        if (std::abs(phi.coeff(n)) > 1.0 + tol)
            return false;
    for (const double r : {0.5, 0.9, 0.99}) {
        const double certified_floor =
            sup_on_circle(phi, r, 256).lower - truncation_tail_bound(1.0, r, phi.degree());
        if (certified_floor > 1.0 + tol)
            return false;
    }
    return true;
}

enum class SchwarzFamily { Blaschke, Schur };

// Deterministic sample of one of the two generator families. Blaschke zeros
// are drawn in the disk of radius 0.95 and Schur parameters in the disk of
// radius 0.99 to keep the reciprocal well-conditioned; for the Blaschke
// family the result is Schwarz by construction, for the Schur family the
// leading parameter is forced to zero.
inline TruncatedSeries random_schwarz(uint64_t seed, SchwarzFamily family, int count, int degree) {
    Rng rng(seed);
    if (family == SchwarzFamily::Blaschke) {
        if (count < 0 || count > 8)
            throw ParameterOutOfRange("random_schwarz: Blaschke family supports 0..8 zeros");
        std::vector<Complex> zeros(static_cast<size_t>(count));
        for (Complex& zero : zeros)
            zero = rng.in_disk(0.95);
        return blaschke_schwarz(zeros, rng.angle(), degree);
    }
    if (count < 1 || count > 16)
        throw ParameterOutOfRange("random_schwarz: Schur family supports 1..16 parameters");
    std::vector<Complex> gammas(static_cast<size_t>(count));
    gammas[0] = Complex{0.0, 0.0};
    for (size_t k = 1; k < gammas.size(); ++k)
        gammas[k] = rng.in_disk(0.99);
    return schur_series(gammas, degree);
}

// Constructive description of one generated function, serializable and
// rebuildable at any degree.
struct SchwarzSpec {
    enum class Variant { MoebiusBounded, BlaschkeSchwarz, SchurBounded };

    Variant variant = Variant::BlaschkeSchwarz;
    double moebius_a = 0.0;
    std::vector<Complex> zeros;
    double rotation = 0.0;
    std::vector<Complex> gammas;
    int degree = kDefaultDegree;

    void validate() const {
        switch (variant) {
        case Variant::MoebiusBounded:
            if (!(moebius_a >= 0.0) || moebius_a >= 1.0)
                throw ParameterOutOfRange("SchwarzSpec: moebius parameter must lie in [0, 1)");
            break;
        case Variant::BlaschkeSchwarz:
            for (const Complex& zero : zeros)
                if (std::abs(zero) > 1.0 - 1e-9)
                    throw ParameterOutOfRange("SchwarzSpec: Blaschke zero too close to the circle");
            break;
        case Variant::SchurBounded:
            if (gammas.empty())
                throw ParameterOutOfRange("SchwarzSpec: Schur variant needs parameters");
            for (const Complex& gamma : gammas)
                if (std::abs(gamma) > 1.0)
                    throw ParameterOutOfRange("SchwarzSpec: Schur parameter outside the closed disk");
            break;
        }
    }

    TruncatedSeries build(int at_degree) const {
        validate();
        switch (variant) {
        case Variant::MoebiusBounded:
            return moebius_series(moebius_a, at_degree);
        case Variant::BlaschkeSchwarz:
            return blaschke_schwarz(zeros, rotation, at_degree);
        case Variant::SchurBounded:
        default:
            return schur_series(gammas, at_degree);
        }
    }

    TruncatedSeries build() const { return build(degree); }

    // Whether the described function vanishes at the origin.
    bool is_schwarz() const {
        switch (variant) {
        case Variant::MoebiusBounded:
            return moebius_a == 0.0;
        case Variant::BlaschkeSchwarz:
            return true;
        case Variant::SchurBounded:
        default:
            return !gammas.empty() && gammas[0] == Complex{0.0, 0.0};
        }
    }
};

// Seeded SchwarzSpec draws; with force_schwarz the sample describes a
// Schwarz function, otherwise merely a unit-bounded one.
inline SchwarzSpec sample_spec(uint64_t seed, SchwarzFamily family, int count, int degree,
                               bool force_schwarz) {
    Rng rng(seed);
    SchwarzSpec spec;
    spec.degree = degree;
    if (family == SchwarzFamily::Blaschke) {
        spec.variant = SchwarzSpec::Variant::BlaschkeSchwarz;
        spec.zeros.resize(static_cast<size_t>(count));
        for (Complex& zero : spec.zeros)
            zero = rng.in_disk(0.95);
        spec.rotation = rng.angle();
    } else {
        spec.variant = SchwarzSpec::Variant::SchurBounded;
        spec.gammas.resize(static_cast<size_t>(count));
        for (Complex& gamma : spec.gammas)
            gamma = rng.in_disk(0.99);
        if (force_schwarz)
            spec.gammas[0] = Complex{0.0, 0.0};
    }
    return spec;
}

inline void to_json(nlohmann::json& j, const SchwarzSpec& spec) {
    auto complex_list = [](const std::vector<Complex>& values) {
        auto arr = nlohmann::json::array();
        for (const Complex& v : values)
            arr.push_back({v.real(), v.imag()});
        return arr;
    };
    switch (spec.variant) {
    case SchwarzSpec::Variant::MoebiusBounded:
        j = nlohmann::json{{"variant", "moebius"}, {"params", {spec.moebius_a}}, {"degree", spec.degree}};
        break;
    case SchwarzSpec::Variant::BlaschkeSchwarz:
        j = nlohmann::json{{"variant", "blaschke"},
                           {"params", complex_list(spec.zeros)},
                           {"rotation", spec.rotation},
                           {"degree", spec.degree}};
        break;
    case SchwarzSpec::Variant::SchurBounded:
        j = nlohmann::json{{"variant", "schur"}, {"params", complex_list(spec.gammas)}, {"degree", spec.degree}};
        break;
    }
}

inline void from_json(const nlohmann::json& j, SchwarzSpec& spec) {
    const std::string variant = j.at("variant").get<std::string>();
    spec = SchwarzSpec{};
    spec.degree = j.at("degree").get<int>();
    auto complex_list = [](const nlohmann::json& arr) {
        std::vector<Complex> out;
        out.reserve(arr.size());
        for (const auto& v : arr)
            out.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
        return out;
    };
    if (variant == "moebius") {
        spec.variant = SchwarzSpec::Variant::MoebiusBounded;
        spec.moebius_a = j.at("params").at(0).get<double>();
    } else if (variant == "blaschke") {
        spec.variant = SchwarzSpec::Variant::BlaschkeSchwarz;
        spec.zeros = complex_list(j.at("params"));
        spec.rotation = j.value("rotation", 0.0);
    } else if (variant == "schur") {
        spec.variant = SchwarzSpec::Variant::SchurBounded;
        spec.gammas = complex_list(j.at("params"));
    } else {
        throw std::invalid_argument("SchwarzSpec: unknown variant '" + variant + "'");
    }
    spec.validate();
}

}  // namespace majorant

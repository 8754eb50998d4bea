// Exact arithmetic on truncated power series with complex coefficients.
//
// A TruncatedSeries holds the coefficients a_0..a_N of an analytic function.
// All operations are pure; none mutate their arguments. Truncating products
// and compositions keeps every retained coefficient exact at the coefficient
// recurrence level: coefficient n of f*g depends only on coefficients <= n of
// the operands, and coefficient n of h(phi) depends only on b_0..b_n and
// phi's coefficients 1..n because phi(0) = 0.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include <json.hpp>

#include "majorant/errors.hpp"

namespace majorant {

using Complex = std::complex<double>;

// Cap applied when a product or composition degree is not given explicitly.
inline constexpr int kMaxAutoDegree = 16384;

class TruncatedSeries {
  public:
    TruncatedSeries() : coeffs_(1, Complex{0.0, 0.0}) {}

    explicit TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("TruncatedSeries: needs at least the constant coefficient");
        for (const Complex& c : coeffs_)
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
                throw std::invalid_argument("TruncatedSeries: non-finite coefficient");
    }

    static TruncatedSeries zero(int degree) {
        return TruncatedSeries(std::vector<Complex>(static_cast<size_t>(degree) + 1));
    }

    static TruncatedSeries constant(Complex value, int degree = 0) {
        auto s = zero(degree);
        s.coeffs_[0] = value;
        return s;
    }

    static TruncatedSeries one(int degree = 0) { return constant(Complex{1.0, 0.0}, degree); }

    // c * z^n
    static TruncatedSeries monomial(int n, Complex c = Complex{1.0, 0.0}) {
        auto s = zero(n);
        s.coeffs_[static_cast<size_t>(n)] = c;
        return s;
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex coeff(int n) const {
        return n >= 0 && n <= degree() ? coeffs_[static_cast<size_t>(n)] : Complex{0.0, 0.0};
    }

    bool operator==(const TruncatedSeries& other) const { return coeffs_ == other.coeffs_; }

    // Horner evaluation of the polynomial a_0 + ... + a_N z^N.
    Complex eval(Complex z) const {
        Complex acc{0.0, 0.0};
        for (size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * z + coeffs_[i];
        return acc;
    }

  private:
    std::vector<Complex> coeffs_;

    friend TruncatedSeries add(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries scale(const TruncatedSeries&, Complex);
    friend TruncatedSeries mul(const TruncatedSeries&, const TruncatedSeries&, int);
    friend TruncatedSeries mul_z(const TruncatedSeries&, int);
    friend TruncatedSeries compose(const TruncatedSeries&, const TruncatedSeries&, int);
    friend TruncatedSeries reciprocal(const TruncatedSeries&, int);
    friend TruncatedSeries section(const TruncatedSeries&, int);
};

// Coefficientwise sum; the shorter operand is zero-padded.
inline TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
    auto out = TruncatedSeries::zero(std::max(f.degree(), g.degree()));
    for (int n = 0; n <= out.degree(); ++n)
        out.coeffs_[static_cast<size_t>(n)] = f.coeff(n) + g.coeff(n);
    return out;
}

inline TruncatedSeries scale(const TruncatedSeries& f, Complex alpha) {
    auto out = f;
    for (Complex& c : out.coeffs_)
        c *= alpha;
    return out;
}

// Truncated Cauchy product c_n = sum_{j} a_j b_{n-j}, exact up to n_out.
inline TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g, int n_out) {
    auto out = TruncatedSeries::zero(n_out);
    for (int n = 0; n <= n_out; ++n) {
        Complex acc{0.0, 0.0};
        const int j_lo = std::max(0, n - g.degree());
        const int j_hi = std::min(n, f.degree());
        for (int j = j_lo; j <= j_hi; ++j)
            acc += f.coeff(j) * g.coeff(n - j);
        out.coeffs_[static_cast<size_t>(n)] = acc;
    }
    return out;
}

inline TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    return mul(f, g, std::min(f.degree() + g.degree(), kMaxAutoDegree));
}

// z * f truncated at n_out.
inline TruncatedSeries mul_z(const TruncatedSeries& f, int n_out) {
    auto out = TruncatedSeries::zero(n_out);
    for (int n = 1; n <= n_out; ++n)
        out.coeffs_[static_cast<size_t>(n)] = f.coeff(n - 1);
    return out;
}

// f^k by left-folded repeated multiplication, every step truncated at n_out.
inline TruncatedSeries pow_series(const TruncatedSeries& f, int k, int n_out) {
    if (k < 0)
        throw ParameterOutOfRange("pow_series: negative exponent");
    auto acc = TruncatedSeries::one();
    for (int i = 0; i < k; ++i)
        acc = mul(acc, f, n_out);
    return acc;
}

// h(phi) with phi(0) = 0, exact up to n_out. Accumulates b_n * phi^n in
// ascending n with phi^n built by repeated truncated multiplication; the
// term with n = min(deg h, n_out) is the last one that can touch a retained
// coefficient since phi^n has valuation n.
inline TruncatedSeries compose(const TruncatedSeries& h, const TruncatedSeries& phi, int n_out) {
    if (std::abs(phi.coeff(0)) > 0.0)
        throw NonzeroInnerConstantTerm("compose: inner series must vanish at the origin");
    auto out = TruncatedSeries::zero(n_out);
    auto power = TruncatedSeries::one();
    const int last = std::min(h.degree(), n_out);
    for (int n = 0; n <= last; ++n) {
        const Complex b = h.coeff(n);
        for (int i = 0; i <= std::min(power.degree(), n_out); ++i)
            out.coeffs_[static_cast<size_t>(i)] += b * power.coeff(i);
        if (n < last)
            power = mul(power, phi, n_out);
    }
    return out;
}

inline TruncatedSeries compose(const TruncatedSeries& h, const TruncatedSeries& phi) {
    return compose(h, phi, std::min(std::max(h.degree() * phi.degree(), 0), kMaxAutoDegree));
}

// g with mul(f, g) = 1 + O(z^{n_out+1}); standard recursive coefficient solve.
inline TruncatedSeries reciprocal(const TruncatedSeries& f, int n_out) {
    const Complex f0 = f.coeff(0);
    if (f0 == Complex{0.0, 0.0})
        throw ZeroConstantTerm("reciprocal: constant term is zero");
    auto out = TruncatedSeries::zero(n_out);
    out.coeffs_[0] = Complex{1.0, 0.0} / f0;
    for (int n = 1; n <= n_out; ++n) {
        Complex acc{0.0, 0.0};
        const int j_hi = std::min(n, f.degree());
        for (int j = 1; j <= j_hi; ++j)
            acc += f.coeff(j) * out.coeff(n - j);
        out.coeffs_[static_cast<size_t>(n)] = -acc / f0;
    }
    return out;
}

inline TruncatedSeries reciprocal(const TruncatedSeries& f) { return reciprocal(f, f.degree()); }

// k-th section a_0 + ... + a_k z^k; the series is returned unchanged when
// k >= deg f.
inline TruncatedSeries section(const TruncatedSeries& f, int k) {
    if (k < 0)
        throw ParameterOutOfRange("section: negative index");
    if (k >= f.degree())
        return f;
    auto out = TruncatedSeries::zero(k);
    for (int n = 0; n <= k; ++n)
        out.coeffs_[static_cast<size_t>(n)] = f.coeff(n);
    return out;
}

inline TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
    return add(f, g);
}

inline TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
    return mul(f, g);
}

inline void to_json(nlohmann::json& j, const TruncatedSeries& s) {
    auto coeffs = nlohmann::json::array();
    for (const Complex& c : s.coeffs())
        coeffs.push_back({c.real(), c.imag()});
    j = nlohmann::json{{"degree", s.degree()}, {"coeffs", std::move(coeffs)}};
}

inline void from_json(const nlohmann::json& j, TruncatedSeries& s) {
    const int degree = j.at("degree").get<int>();
    const auto& coeffs = j.at("coeffs");
    if (degree < 0 || coeffs.size() != static_cast<size_t>(degree) + 1)
        throw std::invalid_argument("TruncatedSeries: coeffs length must be degree + 1");
    std::vector<Complex> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs)
        out.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
    s = TruncatedSeries(std::move(out));
}

}  // namespace majorant

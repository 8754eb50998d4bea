#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "majorant/theorems.hpp"

#include "oracles.hpp"
#include "test_util.hpp"

using majorant::blaschke_schwarz;
using majorant::CheckOptions;
using majorant::Complex;
using majorant::koebe_series;
using majorant::moebius_series;
using majorant::RadiusParam;
using majorant::random_schwarz;
using majorant::SchwarzFamily;
using majorant::SectionBoundMode;
using majorant::TruncatedSeries;
using majorant::Verdict;

namespace {

const double kThird = 1.0 / 3.0;

TruncatedSeries poly(std::initializer_list<Complex> coeffs, int pad_to = -1) {
    std::vector<Complex> c(coeffs);
    if (pad_to >= 0)
        c.resize(static_cast<size_t>(pad_to) + 1, Complex{0.0, 0.0});
    return TruncatedSeries(std::move(c));
}

TruncatedSeries padded_z(int degree) {
    return add(TruncatedSeries::monomial(1), TruncatedSeries::zero(degree));
}

void check_report_soundness(const majorant::InequalityReport& report) {
    switch (report.verdict) {
    case Verdict::Holds:
        REQUIRE_FALSE(report.lhs.unbounded);
        REQUIRE(report.lhs.upper <= report.rhs.lower + report.tol);
        break;
    case Verdict::Fails:
        REQUIRE(report.lhs.lower > report.rhs.upper + report.tol);
        break;
    case Verdict::Inconclusive:
        break;
    }
}

}  // namespace

TEST_CASE("check_bohr: holds at the Bohr radius, fails beyond for the witness family") {
    for (uint64_t seed = 1; seed <= 8; ++seed) {
        const auto f = majorant::schur_series(
            [&] {
                majorant::Rng rng(seed);
                std::vector<Complex> gammas(4);
                for (auto& g : gammas)
                    g = rng.in_disk(0.99);
                return gammas;
            }(),
            64);
        const auto report = check_bohr(f, 1.0, RadiusParam(kThird));
        CHECK(report.verdict == Verdict::Holds);
        check_report_soundness(report);
    }

    const auto fails = check_bohr(moebius_series(0.95, 64), 1.0, RadiusParam(0.35));
    CHECK(fails.verdict == Verdict::Fails);
    CHECK(fails.lhs.lower ==
          Catch::Approx(oracles::moebius_bohr_closed_form(0.95, 0.35)).margin(1e-12));
    check_report_soundness(fails);

    const auto zero = check_bohr(TruncatedSeries::zero(64), 1.0, RadiusParam(0.3));
    CHECK(zero.verdict == Verdict::Holds);
    CHECK(zero.margin == 1.0);
}

TEST_CASE("check_rogosinski: section sup against 1") {
    const auto witness = moebius_series(0.9, 64);

    const auto fails = check_rogosinski(witness, 1, RadiusParam(0.55));
    CHECK(fails.verdict == Verdict::Fails);
    CHECK(fails.lhs.lower == Catch::Approx(1.0045).margin(1e-6));
    check_report_soundness(fails);

    const auto identity = check_rogosinski(padded_z(64), 3, RadiusParam(0.5));
    CHECK(identity.verdict == Verdict::Holds);
    CHECK(identity.lhs.lower == Catch::Approx(0.5).margin(1e-14));

    const auto at_half = check_rogosinski(witness, 1, RadiusParam(0.5));
    CHECK(at_half.verdict == Verdict::Holds);
    CHECK(at_half.lhs.lower == Catch::Approx(0.995).margin(1e-6));
}

TEST_CASE("check_norm_axioms aggregates the five axioms") {
    std::mt19937_64 rng(42);
    const auto f = test_util::random_series(rng, 16);
    const auto g = test_util::random_series(rng, 16);
    const auto random_report = check_norm_axioms(f, g, Complex{0.0, 2.0}, RadiusParam(kThird));
    CHECK(random_report.verdict == Verdict::Holds);
    for (const auto& sub : random_report.witness.at("subchecks"))
        CHECK(sub.at("pass").get<bool>());

    const auto zero_report =
        check_norm_axioms(TruncatedSeries::zero(8), g, Complex{1.0, 0.0}, RadiusParam(0.5));
    CHECK(zero_report.verdict == Verdict::Holds);

    // Non-negative coefficients make submultiplicativity an equality.
    const auto one_plus_z = poly({Complex{1, 0}, Complex{1, 0}});
    const auto equality =
        check_norm_axioms(one_plus_z, one_plus_z, Complex{1.0, 0.0}, RadiusParam(0.5));
    CHECK(equality.verdict == Verdict::Holds);
    CHECK(majorant::finite_majorant_sum(mul(one_plus_z, one_plus_z, 2), 0.5) == 2.25);
}

TEST_CASE("check_schwarz_majorant: M_r(phi) against r") {
    const auto identity = check_schwarz_majorant(padded_z(64), RadiusParam(kThird));
    CHECK(identity.verdict == Verdict::Holds);
    CHECK(std::abs(identity.margin) < 1e-15);

    const auto small = check_schwarz_majorant(blaschke_schwarz({Complex{0.5, 0}}, 0.0, 64),
                                              RadiusParam(kThird));
    CHECK(small.verdict == Verdict::Holds);
    CHECK(small.lhs.lower ==
          Catch::Approx(kThird * oracles::moebius_bohr_closed_form(0.5, kThird)).margin(1e-12));

    const auto mild = check_schwarz_majorant(blaschke_schwarz({Complex{0.5, 0}}, 0.0, 64),
                                             RadiusParam(0.4));
    CHECK(mild.verdict == Verdict::Holds);
    CHECK(mild.lhs.lower == Catch::Approx(0.4 * 0.875).margin(1e-12));

    const auto fails = check_schwarz_majorant(blaschke_schwarz({Complex{0.95, 0}}, 0.0, 64),
                                              RadiusParam(0.4));
    CHECK(fails.verdict == Verdict::Fails);
    CHECK(fails.lhs.lower ==
          Catch::Approx(0.4 * oracles::moebius_bohr_closed_form(0.95, 0.4)).margin(1e-12));
    check_report_soundness(fails);

    CHECK_THROWS_AS(check_schwarz_majorant(moebius_series(0.5, 64), RadiusParam(0.3)),
                    majorant::InvalidSchwarz);
}

TEST_CASE("check_subordination: exact finite sums on both sides") {
    const auto h = poly({Complex{1, 0}, Complex{1, 0}});
    const auto z2 = poly({Complex{0, 0}, Complex{0, 0}, Complex{1, 0}});
    const auto basic = check_subordination(h, z2, RadiusParam(0.3));
    CHECK(basic.verdict == Verdict::Holds);
    CHECK(basic.lhs.lower == Catch::Approx(1.09).margin(1e-15));
    CHECK(basic.rhs.lower == Catch::Approx(1.3).margin(1e-15));

    std::mt19937_64 rng(5);
    const auto random_h = test_util::random_series(rng, 8);
    const auto equality = check_subordination(random_h, padded_z(8), RadiusParam(0.25));
    CHECK(equality.verdict == Verdict::Holds);
    CHECK(equality.margin == 0.0);

    const auto fails = check_subordination(poly({Complex{0, 0}, Complex{1, 0}}),
                                           blaschke_schwarz({Complex{0.95, 0}}, 0.0, 64),
                                           RadiusParam(0.35));
    CHECK(fails.verdict == Verdict::Fails);
    CHECK(fails.lhs.lower ==
          Catch::Approx(0.35 * oracles::moebius_bohr_closed_form(0.95, 0.35)).margin(1e-12));
    check_report_soundness(fails);
}

TEST_CASE("check_general_subordination: weighted composition bound") {
    // g = 1, b = 1, rho = 1 reduces to plain subordination, verdict for verdict.
    for (uint64_t seed = 0; seed < 6; ++seed) {
        std::mt19937_64 rng(seed);
        const auto h = test_util::random_series(rng, 10);
        const auto phi = random_schwarz(seed, SchwarzFamily::Blaschke, 2, 64);
        const auto general = check_general_subordination(h, TruncatedSeries::one(64), phi, 1.0,
                                                         1.0, RadiusParam(0.3));
        const auto plain = check_subordination(h, phi, RadiusParam(0.3));
        CHECK(general.verdict == plain.verdict);
        CHECK(general.lhs.lower == plain.lhs.lower);
        CHECK(general.rhs.lower == plain.rhs.lower);
    }

    // Constant g = b scales both sides.
    std::mt19937_64 rng(17);
    const auto h = test_util::random_series(rng, 12);
    const auto phi = random_schwarz(3, SchwarzFamily::Schur, 5, 64);
    const auto scaled = check_general_subordination(
        h, TruncatedSeries::constant(Complex{2.0, 0.0}, 64), phi, 2.0, 1.0, RadiusParam(0.3));
    CHECK(scaled.verdict == Verdict::Holds);

    // g bounded by 1 on the rho = 0.9 disk via dilation of a unit-bounded u.
    const double rho = 0.9;
    const auto u = majorant::schur_series({Complex{0.4, 0.2}, Complex{-0.3, 0.6}}, 64);
    std::vector<Complex> dilated(65);
    for (int n = 0; n <= 64; ++n)
        dilated[static_cast<size_t>(n)] = u.coeff(n) / std::pow(rho, n);
    const auto g = TruncatedSeries(dilated);
    const auto report = check_general_subordination(poly({Complex{0, 0}, Complex{1, 0}}), g,
                                                    padded_z(64), 1.0, rho, RadiusParam(0.3));
    CHECK(report.verdict == Verdict::Holds);
    check_report_soundness(report);

    CHECK_THROWS_AS(check_general_subordination(h, g, phi, 1.0, 1.2, RadiusParam(0.3)),
                    majorant::ParameterOutOfRange);
    CHECK_THROWS_AS(check_general_subordination(h, g, phi, 0.0, 0.9, RadiusParam(0.3)),
                    majorant::ParameterOutOfRange);
}

TEST_CASE("check_quasi_subordination delegates to the weighted bound") {
    std::mt19937_64 rng(23);
    const auto h = test_util::random_series(rng, 8);

    const auto equality =
        check_quasi_subordination(h, TruncatedSeries::one(8), padded_z(8), RadiusParam(0.3));
    CHECK(equality.verdict == Verdict::Holds);
    CHECK(equality.margin == 0.0);

    const auto mixed = check_quasi_subordination(
        poly({Complex{1, 0}, Complex{1, 0}}), moebius_series(0.5, 64),
        poly({Complex{0, 0}, Complex{0, 0}, Complex{1, 0}}, 64), RadiusParam(kThird));
    CHECK(mixed.verdict == Verdict::Holds);

    const auto fails = check_quasi_subordination(TruncatedSeries::one(64),
                                                 moebius_series(0.95, 64), padded_z(64),
                                                 RadiusParam(0.35));
    CHECK(fails.verdict == Verdict::Fails);
    CHECK(fails.lhs.lower ==
          Catch::Approx(oracles::moebius_bohr_closed_form(0.95, 0.35)).margin(1e-12));
    CHECK(fails.witness.at("theorem") == "quasi-subordination");
}

TEST_CASE("check_von_neumann_type: sup-norm bracket on the unit circle") {
    const auto monomial = check_von_neumann_type(poly({Complex{0, 0}, Complex{0, 0}, Complex{0, 0},
                                                       Complex{0, 0}, Complex{1, 0}}),
                                                 random_schwarz(9, SchwarzFamily::Blaschke, 3, 64),
                                                 RadiusParam(kThird));
    CHECK(monomial.verdict == Verdict::Holds);

    const auto affine =
        check_von_neumann_type(poly({Complex{1, 0}, Complex{1, 0}}), padded_z(64), RadiusParam(kThird));
    CHECK(affine.verdict == Verdict::Holds);
    CHECK(affine.margin == Catch::Approx(2.0 - 4.0 / 3.0).margin(1e-12));

    const auto constant = check_von_neumann_type(TruncatedSeries::constant(Complex{0.3, -0.4}, 4),
                                                 padded_z(4), RadiusParam(0.2));
    CHECK(constant.verdict == Verdict::Holds);
    CHECK(constant.margin == 0.0);
}

TEST_CASE("check_section_powers: sup and majorant sub-verdicts") {
    // phi = z: both sides equal r^j; the majorant side certifies equality,
    // the sampled sup side cannot (its correction exceeds tol), so the
    // sub-verdicts split.
    const auto equal_case = check_section_powers(padded_z(64), 2, 3, RadiusParam(kThird));
    CHECK(equal_case.witness.at("majorant_verdict") == "holds");
    CHECK(equal_case.rhs.lower == majorant::power_iter(kThird, 2));

    const auto blaschke_case =
        check_section_powers(blaschke_schwarz({Complex{0.5, 0}}, 0.0, 64), 2, 3, RadiusParam(kThird));
    CHECK(blaschke_case.witness.at("majorant_verdict") == "holds");
    CHECK(blaschke_case.verdict == Verdict::Holds);
    check_report_soundness(blaschke_case);

    // Beyond r = 1/2 the sup bound genuinely fails for near-extremal phi once
    // the section keeps two aligned terms: s_2(phi) = 0.9 z - 0.19 z^2 has
    // aligned-phase sup 0.9 r + 0.19 r^2 = 0.552475 > 0.55 at r = 0.55.
    const auto beyond = check_section_powers(blaschke_schwarz({Complex{0.9, 0}}, 0.0, 64), 1, 2,
                                             RadiusParam(0.55));
    CHECK(beyond.verdict == Verdict::Fails);
    CHECK(beyond.lhs.lower == Catch::Approx(0.552475).margin(1e-5));
    check_report_soundness(beyond);

    // k = 1 keeps a single term, so the sup stays |c_1| r <= r at every r.
    const auto single = check_section_powers(blaschke_schwarz({Complex{0.9, 0}}, 0.0, 64), 1, 1,
                                             RadiusParam(0.55));
    CHECK(single.verdict == Verdict::Holds);

    CHECK_THROWS_AS(check_section_powers(padded_z(8), 0, 1, RadiusParam(0.3)),
                    majorant::ParameterOutOfRange);
}

TEST_CASE("check_section_sup: sampled sections against the outer majorant") {
    // With phi = z and a two-term section the triangle inequality is attained
    // on the circle, so that case is an exact tie a sampled bracket cannot
    // certify; three misaligned terms leave a real margin.
    const auto tie = check_section_sup(poly({Complex{1, 0}, Complex{0, 1}}, 8), padded_z(8), 1,
                                       RadiusParam(0.5));
    CHECK(tie.verdict == Verdict::Inconclusive);
    CHECK(tie.lhs.lower == Catch::Approx(1.5).margin(1e-6));

    const auto misaligned = check_section_sup(
        poly({Complex{1, 0}, Complex{0, 1}, Complex{1, 0}}, 8), padded_z(8), 2, RadiusParam(0.5));
    CHECK(misaligned.verdict == Verdict::Holds);
    CHECK(misaligned.rhs.lower == Catch::Approx(1.75).margin(1e-15));
    CHECK(misaligned.margin > 0.3);

    std::vector<Complex> geom(65, Complex{1.0, 0.0});
    geom[0] = Complex{0.0, 0.0};
    const auto tail_killed = check_section_sup(
        TruncatedSeries(geom), poly({Complex{0, 0}, Complex{0, 0}, Complex{1, 0}}, 64), 2,
        RadiusParam(0.5));
    CHECK(tail_killed.verdict == Verdict::Holds);
    CHECK(tail_killed.lhs.lower == Catch::Approx(0.25).margin(1e-12));
    CHECK(tail_killed.rhs.lower == 0.75);

    const auto constant = check_section_sup(TruncatedSeries::one(16), padded_z(16), 4,
                                            RadiusParam(0.5));
    CHECK(constant.verdict == Verdict::Holds);
    CHECK(constant.margin == 0.0);
}

TEST_CASE("check_section_majorant: sectioned finite sums") {
    std::mt19937_64 rng(31);
    const auto h = test_util::random_series(rng, 10);
    const auto equality = check_section_majorant(h, padded_z(10), 5, RadiusParam(0.3));
    CHECK(equality.verdict == Verdict::Holds);
    CHECK(equality.margin == 0.0);

    const auto killed = check_section_majorant(poly({Complex{1, 0}, Complex{1, 0}}),
                                               poly({Complex{0, 0}, Complex{0, 0}, Complex{1, 0}}),
                                               1, RadiusParam(kThird));
    CHECK(killed.verdict == Verdict::Holds);
    CHECK(killed.lhs.lower == 1.0);
    CHECK(killed.rhs.lower == Catch::Approx(1.0 + kThird).margin(1e-15));

    const auto fails =
        check_section_majorant(poly({Complex{0, 0}, Complex{1, 0}}),
                               blaschke_schwarz({Complex{0.95, 0}}, 0.0, 64), 64, RadiusParam(0.35));
    CHECK(fails.verdict == Verdict::Fails);
    check_report_soundness(fails);
}

TEST_CASE("check_debranges_bound: shipped univalent witnesses only") {
    const auto koebe = koebe_series(0.0, 64);
    CHECK(majorant::is_koebe_rotation(koebe));
    CHECK(majorant::is_koebe_rotation(koebe_series(1.234, 64)));
    CHECK(majorant::is_koebe_rotation(scale(koebe_series(0.7, 32), Complex{0.0, 1.0})));
    CHECK_FALSE(majorant::is_koebe_rotation(poly({Complex{0, 0}, Complex{1, 0}, Complex{3, 0}})));

    const auto z2 = poly({Complex{0, 0}, Complex{0, 0}, Complex{1, 0}}, 64);
    const auto maj = check_debranges_bound(koebe, z2, 2, RadiusParam(kThird),
                                           SectionBoundMode::Majorant);
    CHECK(maj.verdict == Verdict::Holds);
    CHECK(maj.lhs.lower == majorant::power_iter(kThird, 2));
    CHECK(maj.rhs.lower == 3.0);

    const auto sup = check_debranges_bound(koebe, padded_z(64), 1, RadiusParam(0.5),
                                           SectionBoundMode::Sup);
    CHECK(sup.verdict == Verdict::Holds);
    CHECK(sup.lhs.lower == Catch::Approx(0.5).margin(1e-14));
    CHECK(sup.rhs.lower == 1.0);

    const auto zero_section = check_debranges_bound(koebe, padded_z(64), 0, RadiusParam(0.4),
                                                    SectionBoundMode::Majorant);
    CHECK(zero_section.verdict == Verdict::Holds);
    CHECK(zero_section.lhs.lower == 0.0);
    CHECK(zero_section.rhs.lower == 0.0);

    CHECK_THROWS_AS(check_debranges_bound(poly({Complex{0, 0}, Complex{1, 0}, Complex{3, 0}}, 64),
                                          padded_z(64), 2, RadiusParam(0.4),
                                          SectionBoundMode::Majorant),
                    majorant::NotAUnivalentWitness);
}

TEST_CASE("reports serialize with verdict, brackets, margin, and witness") {
    const auto report = check_bohr(moebius_series(0.95, 64), 1.0, RadiusParam(0.35));
    const nlohmann::json j = report;
    CHECK(j.at("verdict") == "fails");
    CHECK(j.at("witness").at("theorem") == "bohr");
    const auto back = j.get<majorant::InequalityReport>();
    CHECK(back.verdict == report.verdict);
    CHECK(back.margin == report.margin);
    CHECK(back.lhs.lower == report.lhs.lower);
}

TEST_CASE("failing reports are bit-for-bit reproducible") {
    const auto first = check_bohr(moebius_series(0.95, 64), 1.0, RadiusParam(0.35));
    const auto second = check_bohr(moebius_series(0.95, 64), 1.0, RadiusParam(0.35));
    CHECK(first.verdict == second.verdict);
    CHECK(first.margin == second.margin);
    CHECK(first.lhs.lower == second.lhs.lower);
    CHECK(first.lhs.upper == second.lhs.upper);

    const auto r1 = check_rogosinski(moebius_series(0.9, 64), 1, RadiusParam(0.55));
    const auto r2 = check_rogosinski(moebius_series(0.9, 64), 1, RadiusParam(0.55));
    CHECK(r1.margin == r2.margin);
    CHECK(r1.lhs.lower == r2.lhs.lower);
}

TEST_CASE("theorem suite: seeded pairs produce zero Fails in the guarantee windows") {
    const std::vector<double> third_grid{0.05, 0.15, 0.25, kThird};
    const std::vector<double> half_grid{0.1, 0.3, 0.5};
    int inconclusive = 0;
    int total = 0;
    for (uint64_t seed = 0; seed < 50; ++seed) {
        std::mt19937_64 rng(seed * 7919 + 1);
        const int dh = 1 + static_cast<int>(rng() % 16);
        const auto h = test_util::random_series(rng, dh);
        const auto phi = (seed % 2 == 0)
                             ? random_schwarz(seed, SchwarzFamily::Blaschke,
                                              1 + static_cast<int>(seed % 8), 64)
                             : random_schwarz(seed, SchwarzFamily::Schur,
                                              2 + static_cast<int>(seed % 15), 64);
        const auto psi = majorant::schur_series(
            [&] {
                majorant::Rng prng(seed + 1000);
                std::vector<Complex> gammas(3);
                for (auto& g : gammas)
                    g = prng.in_disk(0.99);
                return gammas;
            }(),
            64);
        const int k = static_cast<int>(rng() % 17);

        auto tally = [&](const majorant::InequalityReport& report) {
            ++total;
            REQUIRE(report.verdict != Verdict::Fails);
            if (report.verdict == Verdict::Inconclusive)
                ++inconclusive;
            check_report_soundness(report);
        };

        for (const double r : third_grid) {
            tally(check_subordination(h, phi, RadiusParam(r)));
            tally(check_quasi_subordination(h, psi, phi, RadiusParam(r)));
            tally(check_section_majorant(h, phi, k, RadiusParam(r)));
        }
        for (const double r : half_grid) {
            tally(check_section_sup(h, phi, k, RadiusParam(r)));
            tally(check_rogosinski(psi, k, RadiusParam(r)));
        }
        tally(check_bohr(psi, 1.0, RadiusParam(kThird)));
        tally(check_schwarz_majorant(phi, RadiusParam(kThird)));
        tally(check_von_neumann_type(h, phi, RadiusParam(0.1)));
        tally(check_von_neumann_type(h, phi, RadiusParam(kThird)));
    }
    CHECK(total == 50 * (3 * 4 + 2 * 3 + 4));
    CHECK(inconclusive <= total / 100);
}

TEST_CASE("section checkers reject indices beyond the truncation degree") {
    const auto phi = padded_z(16);
    const auto h = poly({Complex{1, 0}, Complex{1, 0}});
    CHECK_THROWS_AS(check_section_sup(h, phi, 17, RadiusParam(0.3)),
                    majorant::ParameterOutOfRange);
    CHECK_THROWS_AS(check_section_majorant(h, phi, 17, RadiusParam(0.3)),
                    majorant::ParameterOutOfRange);
    CHECK_THROWS_AS(check_section_powers(phi, 2, 17, RadiusParam(0.3)),
                    majorant::ParameterOutOfRange);
    // At the degree itself the full truncation is the section.
    CHECK(check_section_majorant(h, phi, 16, RadiusParam(0.3)).verdict == Verdict::Holds);
}

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "darboux/closed_forms.hpp"
#include "darboux/dressing.hpp"
#include "darboux/errors.hpp"
#include "darboux/sturm_crum.hpp"
#include "darboux/verify.hpp"
#include "oracles.hpp"

using namespace darboux;

TEST_CASE("nls_residual: zero and constant fields") {
    const Window win{-2, 2, -1, 1};
    const auto zero = [](double, double) { return cplx(0, 0); };
    const ResidualReport rz = nls_residual(zero, win, 1e-3);
    CHECK(rz.sup_norm == 0.0);
    CHECK(rz.l2_norm == 0.0);
    CHECK(rz.points == 21 * 9);

    // constants do not solve focusing NLS: residual = |2*1*1| = 2
    const auto one = [](double, double) { return cplx(1, 0); };
    const ResidualReport rc = nls_residual(one, win, 1e-3);
    CHECK(rc.sup_norm == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("nls_residual: 1-soliton converges at O(h^2)") {
    const DressingSystem sys({SpectralParam{cplx(0, 1)}});
    const auto field = [&](double x, double t) { return r_field(sys, x, t); };
    const Window win{-3, 3, -1, 1};
    const double s1 = nls_residual(field, win, 2e-3).sup_norm;
    const double s2 = nls_residual(field, win, 1e-3).sup_norm;
    CHECK(s1 / s2 >= 3.5);
    CHECK(s1 / s2 <= 4.5);
}

TEST_CASE("nls_residual: window validation") {
    const auto zero = [](double, double) { return cplx(0, 0); };
    CHECK_THROWS_AS(nls_residual(zero, Window{0, 1e-3, -1, 1}, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(nls_residual(zero, Window{-1, 1, -1, 1, 2, 2}, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(nls_residual(zero, Window{-1, 1, -1, 1}, -1.0), std::invalid_argument);
}

TEST_CASE("sl_residual: free solutions") {
    const auto zero_u = [](double) { return 0.0; };
    const auto zero_psi = [](double) { return 0.0; };
    CHECK(sl_residual(zero_psi, zero_u, 1.0, Interval{-2, 2}, 1e-3).sup_norm == 0.0);

    const double k = 1.7;
    const auto psi = [k](double x) { return std::sin(k * x); };
    const double s1 = sl_residual(psi, zero_u, k * k, Interval{-2, 2}, 2e-3).sup_norm;
    const double s2 = sl_residual(psi, zero_u, k * k, Interval{-2, 2}, 1e-3).sup_norm;
    CHECK(s1 / s2 >= 3.5);
    CHECK(s1 / s2 <= 4.5);
}

TEST_CASE("sl_residual: dressed pair from the cosh seed converges at O(h^2)") {
    // psi[1] = q cos'(qx) - tanh(x) cos(qx), u[1] from crum_potential
    const SturmSeed seed = cosh_seed(1.0);
    const double q = 1.5;
    const auto psi1 = [&](double x) {
        return darboux_once(seed, std::cos(q * x), -q * std::sin(q * x), x);
    };
    const auto zero = [](double) { return 0.0; };
    const auto u1 = [&](double x) { return crum_potential({seed}, zero, x, 1e-3); };
    const double s1 = sl_residual(psi1, u1, q * q, Interval{-3, 3}, 1e-2).sup_norm;
    const double s2 = sl_residual(psi1, u1, q * q, Interval{-3, 3}, 5e-3).sup_norm;
    CHECK(s1 / s2 >= 3.5);
    CHECK(s1 / s2 <= 4.5);
}

TEST_CASE("mass: 1-soliton carries exactly 4") {
    const SpectralParam p{cplx(0, 1)};
    const auto field = [&](double x, double t) { return one_soliton(p, x, t); };
    CHECK(std::abs(mass(field, 0.0, -20, 20, 1e-3) - 4.0) <= 1e-8);
}

TEST_CASE("mass: zero field") {
    const auto zero = [](double, double) { return cplx(0, 0); };
    CHECK(mass(zero, 0.0, -20, 20, 1e-2) == 0.0);
}

TEST_CASE("mass: conserved for the 2-soliton") {
    const DressingSystem sys({SpectralParam{cplx(0, 1)}, SpectralParam{cplx(0, 2)}});
    const auto field = [&](double x, double t) { return r_field(sys, x, t); };
    const double m_minus = mass(field, -2.0, -20, 20, 2e-3);
    const double m_plus = mass(field, 2.0, -20, 20, 2e-3);
    CHECK(std::abs(m_minus - m_plus) <= 1e-6 * m_plus);
    // 4 * (Im l1 + Im l3)
    CHECK(m_plus == doctest::Approx(12.0).epsilon(1e-7));
}

TEST_CASE("mass: insufficient decay at the window edge") {
    const SpectralParam p{cplx(0, 1)};
    const auto field = [&](double x, double t) { return one_soliton(p, x, t); };
    CHECK_THROWS_AS(mass(field, 0.0, -1, 1, 1e-3), window_error);
}

TEST_CASE("peak_scan: 1-soliton peak at the origin with height 2") {
    const SpectralParam p{cplx(0, 1)};
    const auto field = [&](double x, double t) { return one_soliton(p, x, t); };
    const PeakReport rep = peak_scan(field, 0.0, -5, 5, 1e-3);
    REQUIRE(rep.peaks.size() == 1);
    // golden section brackets to 1e-10, but flat-top location accuracy is
    // limited to ~sqrt(eps) by function-value noise
    CHECK(std::abs(rep.peaks[0].x) <= 1e-7);
    CHECK(rep.peaks[0].height == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("peak_scan: fitted peak velocity is -4 Re(lambda)") {
    const SpectralParam p{cplx(0.35, 0.9)};
    const DressingSystem sys({p});
    const auto field = [&](double x, double t) { return r_field(sys, x, t); };
    const std::vector<double> ts = {-1.0, -0.5, 0.0, 0.5, 1.0};
    std::vector<double> xs;
    for (double t : ts) {
        const PeakReport rep = peak_scan(field, t, -8, 8, 1e-2);
        REQUIRE(rep.peaks.size() == 1);
        xs.push_back(rep.peaks[0].x);
    }
    CHECK(oracles::fit_slope(ts, xs) == doctest::Approx(-4 * 0.35).epsilon(1e-6));
}

TEST_CASE("peak_scan: no interior maximum gives an empty report") {
    const SpectralParam p{cplx(0, 1)};
    const auto field = [&](double x, double t) { return one_soliton(p, x, t); };
    const PeakReport rep = peak_scan(field, 0.0, 3.0, 9.0, 1e-2); // monotone tail
    CHECK(rep.peaks.empty());
}

TEST_CASE("peak_scan: far-separated 2-soliton shows exactly two unit-height peaks") {
    const DressingSystem sys({SpectralParam{cplx(0.5, 1)}, SpectralParam{cplx(-0.5, 1)}});
    const auto field = [&](double x, double t) { return r_field(sys, x, t); };
    for (double t : {-8.0, 8.0}) {
        const PeakReport rep = peak_scan(field, t, -24, 24, 1e-2);
        REQUIRE(rep.peaks.size() == 2);
        CHECK(rep.peaks[0].x < rep.peaks[1].x);
        CHECK(std::abs(rep.peaks[0].height - 2.0) <= 1e-2);
        CHECK(std::abs(rep.peaks[1].height - 2.0) <= 1e-2);
    }
}

TEST_CASE("peak_scan: far-separated peak heights match {2 Im lambda_k} as a multiset") {
    const DressingSystem sys({SpectralParam{cplx(0.5, 1.0)}, SpectralParam{cplx(-0.5, 0.75)}});
    const auto field = [&](double x, double t) { return r_field(sys, x, t); };
    for (double t : {-8.0, 8.0}) {
        const PeakReport rep = peak_scan(field, t, -24, 24, 1e-2);
        REQUIRE(rep.peaks.size() == 2);
        std::vector<double> heights = {rep.peaks[0].height, rep.peaks[1].height};
        std::sort(heights.begin(), heights.end());
        CHECK(std::abs(heights[0] - 1.5) <= 1e-2);
        CHECK(std::abs(heights[1] - 2.0) <= 1e-2);
    }
}

TEST_CASE("peak_scan: argument validation") {
    const auto zero = [](double, double) { return cplx(0, 0); };
    CHECK_THROWS_AS(peak_scan(zero, 0.0, -1, 1, 0.0), std::invalid_argument);
    CHECK(peak_scan(zero, 0.0, -1, 1, 1e-2).peaks.empty());
}

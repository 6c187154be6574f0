#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nuspectra/oracle.hpp"
#include "nuspectra/specfun.hpp"
#include "nuspectra/util.hpp"

#include <cmath>

using namespace nuspectra;

TEST_CASE("infinite square well spectrum") {
    const auto s = oracle::radial_solve([](double) { return 0.0; },
                                        oracle::Grid{0.0, 1.0, 4000}, 3);
    for (int n = 0; n < 3; ++n) {
        const double exact = (n + 1.0) * (n + 1.0) * M_PI * M_PI / 2.0;
        CHECK(std::fabs(s.eigenvalues[n] - exact) <= 1e-4 * exact);
    }
}

TEST_CASE("harmonic oscillator on the full line") {
    const auto s = oracle::radial_solve([](double x) { return 0.5 * x * x; },
                                        oracle::Grid{-12.0, 12.0, 24001}, 3);
    for (int n = 0; n < 3; ++n)
        CHECK(std::fabs(s.eigenvalues[n] - (n + 0.5)) <= 1e-6);
}

TEST_CASE("eigenvector node count equals index") {
    const auto s = oracle::radial_solve([](double) { return 0.0; },
                                        oracle::Grid{0.0, 1.0, 1200}, 4);
    for (int n = 0; n < 4; ++n) {
        int nodes = 0;
        double prev = 0.0;
        for (double v : s.eigenvectors[n]) {
            if (prev != 0.0 && v * prev < 0.0)
                ++nodes;
            if (std::fabs(v) > 1e-9)
                prev = v;
        }
        CHECK(nodes == n);
    }
}

TEST_CASE("eigenpair residuals and normalization") {
    const auto s = oracle::radial_solve([](double x) { return 0.5 * x * x; },
                                        oracle::Grid{-10.0, 10.0, 3000}, 3);
    const double h = s.grid.spacing();
    for (int n = 0; n < 3; ++n) {
        CHECK(s.residual_norms[n] < 1e-8);
        double norm = 0.0;
        for (double v : s.eigenvectors[n])
            norm += v * v * h;
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("sturm count is consistent with the returned eigenvalues") {
    util::Rng rng(31);
    oracle::SymTridiag T;
    const int n = 40;
    T.diag.resize(n);
    T.off.resize(n - 1);
    for (int i = 0; i < n; ++i)
        T.diag[i] = rng.uniform(-2.0, 2.0);
    for (int i = 0; i + 1 < n; ++i)
        T.off[i] = rng.uniform(-1.0, 1.0);
    const auto vals = oracle::tridiag_eigenvalues(T, 7);
    for (int k = 0; k < 7; ++k)
        CHECK(oracle::sturm_count(T, vals[k] + 1e-11) == k + 1);
}

TEST_CASE("grid refinement converges at second order") {
    auto level0 = [](int pts) {
        return oracle::radial_solve([](double x) { return 0.5 * x * x; },
                                    oracle::Grid{-10.0, 10.0, pts}, 1)
            .eigenvalues[0];
    };
    const double e1 = level0(1001), e2 = level0(2001), e3 = level0(4001);
    const double ratio = (e1 - e2) / (e2 - e3);
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);
}

TEST_CASE("coarse grid raises the refinement warning") {
    const auto s = oracle::radial_solve([](double x) { return 0.5 * x * x; },
                                        oracle::Grid{-10.0, 10.0, 60}, 1, 1.0, 1.0,
                                        true, 1e-8);
    CHECK(s.refinement_warning);
    const auto fine = oracle::radial_solve([](double x) { return 0.5 * x * x; },
                                           oracle::Grid{-10.0, 10.0, 6000}, 1, 1.0, 1.0,
                                           true, 1e-3);
    CHECK_FALSE(fine.refinement_warning);
}

TEST_CASE("angular oracle: zero ring term spectra") {
    auto rich = [](int D, double Lam, int index) {
        const auto s1 = oracle::angular_solve({}, D, Lam, oracle::Grid{0.0, M_PI, 3000},
                                              index + 1);
        const auto s2 = oracle::angular_solve({}, D, Lam, oracle::Grid{0.0, M_PI, 5999},
                                              index + 1);
        return (4.0 * s2.eigenvalues[index] - s1.eigenvalues[index]) / 3.0;
    };
    for (int l = 0; l <= 3; ++l)
        CHECK(std::fabs(rich(3, 0.0, l) - l * (l + 1.0)) < 1e-6);
    for (int l = 0; l <= 2; ++l)
        CHECK(std::fabs(rich(4, 0.0, l) - l * (l + 2.0)) < 1e-6);
    // Lambda = m^2 = 1 in three dimensions: the l >= 1 tower survives.
    for (int i = 0; i <= 2; ++i) {
        const int l = i + 1;
        CHECK(std::fabs(rich(3, 1.0, i) - l * (l + 1.0)) < 1e-6);
    }
}

TEST_CASE("angular eigenvectors carry the symmetrized profile") {
    // zero ring, D = 3, Lambda = 0, second level: H = sqrt(3/2) cos(theta),
    // so the symmetrized eigenvector is sqrt(sin theta) H.
    const oracle::Grid g{0.0, M_PI, 3000};
    const auto s = oracle::angular_solve({}, 3, 0.0, g, 2);
    const auto& v = s.eigenvectors[1];
    const double N = std::sqrt(1.5);
    double sign = 0.0, worst = 0.0;
    for (int i = 1; i + 1 < g.n_points; ++i) {
        const double th = g.point(i);
        const double expect = N * std::cos(th) * std::sqrt(std::sin(th));
        if (sign == 0.0 && std::fabs(expect) > 0.5)
            sign = (expect * v[i - 1] > 0.0) ? 1.0 : -1.0;
    }
    REQUIRE(sign != 0.0);
    for (int i = 1; i + 1 < g.n_points; ++i) {
        const double th = g.point(i);
        const double expect = N * std::cos(th) * std::sqrt(std::sin(th));
        worst = std::max(worst, std::fabs(sign * v[i - 1] - expect));
    }
    CHECK(worst < 2e-3);
}

TEST_CASE("quadrature basics") {
    const auto s1 = oracle::quadrature([](double x) { return std::sin(x); }, 0.0, M_PI, 64);
    CHECK(s1.converged);
    CHECK(std::fabs(s1.value - 2.0) < 1e-10);

    const auto s2 = oracle::quadrature(
        [](double y) {
            return specfun::jacobi_eval(2, {0.0, 0.0}, y) *
                   specfun::jacobi_eval(3, {0.0, 0.0}, y);
        },
        -1.0, 1.0, 64);
    CHECK(s2.converged);
    CHECK(std::fabs(s2.value) < 1e-10);
}

TEST_CASE("quadrature flags slow endpoint singularities") {
    // x^{-0.4} is integrable; the open rule keeps the value sane while the
    // Richardson estimate reports the poor convergence.
    const auto s = oracle::quadrature([](double x) { return std::pow(x, -0.4); }, 0.0, 1.0,
                                      64, 1e-10, 8);
    CHECK(std::fabs(s.value - 1.0 / 0.6) < 5e-3);
    CHECK_FALSE(s.converged);
}

TEST_CASE("tanh-sinh weighted integral vs Beta closed form") {
    util::Rng rng(32);
    for (int t = 0; t < 30; ++t) {
        const double a = rng.uniform(-0.9, 3.0);
        const double b = rng.uniform(-0.9, 3.0);
        const double got = oracle::de_weighted_integral(a, b, [](double) { return 1.0; });
        const double lg = specfun::log_gamma(a + 1.0).log_abs +
                          specfun::log_gamma(b + 1.0).log_abs -
                          specfun::log_gamma(a + b + 2.0).log_abs;
        const double exact = std::exp((a + b + 1.0) * std::log(2.0) + lg);
        CHECK(std::fabs(got - exact) <= 1e-11 * exact);
    }
}

TEST_CASE("pekeris error scan") {
    const auto scan = oracle::pekeris_error_scan(2.0, 4000);
    // Spot value at lambda r = 0.5 (sample 1000 falls exactly there).
    const auto& [x_spot, rel_spot] = scan.curve[999];
    CHECK(x_spot == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rel_spot == doctest::Approx(0.0138).epsilon(2e-3));
    CHECK(scan.curve.front().second < 1e-10);
    CHECK(scan.first_cross_1pct > 0.0);
    CHECK(scan.first_cross_1pct < scan.first_cross_5pct);
    CHECK(scan.first_cross_5pct < scan.first_cross_10pct);
    CHECK(scan.max_rel_error >= scan.curve.back().second);
}

// Acceptance suite: criteria A1..A9, one [PASS]/[FAIL] line per check with
// the measured value and its pinned tolerance. A3 carries a sub-check whose
// 2% threshold the measured error curve genuinely exceeds near the interval
// edge; it reports FAIL so the measurement stays on record (see README,
// "Known measured results").
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nuspectra/angular.hpp"
#include "nuspectra/geometry.hpp"
#include "nuspectra/oracle.hpp"
#include "nuspectra/radial.hpp"
#include "nuspectra/specfun.hpp"
#include "nuspectra/util.hpp"
#include "nuspectra/validate.hpp"

#include <cmath>
#include <cstdio>
#include <string>

using namespace nuspectra;

namespace {

bool report(const std::string& id, const std::string& what, double measured, double tol) {
    const bool pass = measured <= tol;
    std::printf("[%s] %s: %s (measured %.6g, tolerance %.6g)\n", pass ? "PASS" : "FAIL",
                id.c_str(), what.c_str(), measured, tol);
    std::fflush(stdout);
    return pass;
}

void info(const std::string& id, const std::string& what, double value) {
    std::printf("[info] %s: %s = %.6g\n", id.c_str(), what.c_str(), value);
    std::fflush(stdout);
}

radial::PotentialParams anchor() {
    radial::PotentialParams p;
    p.A = 10.0;
    p.B = 3.0;
    p.lambda = 0.5;
    return p;
}

const validate::CheckResult& find_check(const std::vector<validate::CheckResult>& cs,
                                        const std::string& name) {
    for (const auto& c : cs)
        if (c.name == name)
            return c;
    throw std::runtime_error("missing check " + name);
}

} // namespace

TEST_CASE("A1 exact-sector agreement with the finite-difference oracle") {
    const auto p = anchor();
    const auto red = radial::reduce(p, 3, 0, 0.0);
    const int nb = radial::bound_level_count(red.A_t, red.B_t);
    CHECK(report("A1", "levels admitted (need >= 1)", nb >= 1 ? 0.0 : 1.0, 0.0));
    oracle::Grid g{0.0, 40.0, 4000};
    const auto fd = oracle::radial_solve(
        [&](double r) {
            const double t = std::tanh(p.lambda * r);
            return p.A * t * t + p.B / (t * t);
        },
        g, nb);
    for (int n = 0; n < nb; ++n) {
        const double ea = radial::energy_physical(n, 0, 3, p);
        const double rd = std::fabs(ea - fd.eigenvalues[n]) / std::fabs(fd.eigenvalues[n]);
        CHECK(report("A1", "relative difference, level " + std::to_string(n), rd, 1e-4));
    }
}

TEST_CASE("A2 approximated-sector agreement and error envelope") {
    const auto p = anchor();
    const int l = 1;
    const double gd = geometry::centrifugal_gamma(3, l);
    const auto red = radial::reduce(p, 3, l, 0.0);
    const int nb = radial::bound_level_count(red.A_t, red.B_t);
    oracle::Grid g{0.0, 40.0, 4000};
    const double cf_exact = gd * p.hbar * p.hbar / (2.0 * p.mu);
    const double cf_apx = gd * p.hbar * p.hbar * p.lambda * p.lambda / (2.0 * p.mu);
    const auto fd_apx = oracle::radial_solve(
        [&](double r) {
            const double t = std::tanh(p.lambda * r);
            return p.A * t * t + p.B / (t * t) + cf_apx * radial::pekeris_rhs(p.lambda * r);
        },
        g, nb);
    const auto fd_exact = oracle::radial_solve(
        [&](double r) {
            const double t = std::tanh(p.lambda * r);
            return p.A * t * t + p.B / (t * t) + cf_exact / (r * r);
        },
        g, nb);
    const auto scan = oracle::pekeris_error_scan(p.lambda * 40.0, 4000);
    double sup = 0.0;
    for (const auto& [x, rel] : scan.curve)
        sup = std::max(sup, rel / (x * x));
    const double envelope = cf_apx * sup;
    for (int n = 0; n < nb; ++n) {
        const double ea = radial::energy_physical(n, l, 3, p);
        const double rd = std::fabs(ea - fd_apx.eigenvalues[n]) / std::fabs(fd_apx.eigenvalues[n]);
        CHECK(report("A2", "vs stand-in-equation oracle, level " + std::to_string(n), rd, 1e-4));
        const double dev = std::fabs(ea - fd_exact.eigenvalues[n]);
        CHECK(report("A2", "exact-centrifugal deviation vs envelope, level " + std::to_string(n),
                     dev, envelope));
    }
}

TEST_CASE("A3 centrifugal stand-in error audit") {
    const auto scan = oracle::pekeris_error_scan(2.0, 4000);
    double max06 = 0.0, at = 0.0;
    for (const auto& [x, rel] : scan.curve) {
        if (x <= 0.6 && rel > max06) {
            max06 = rel;
            at = x;
        }
    }
    double spot = 0.0;
    for (const auto& [x, rel] : scan.curve)
        if (std::fabs(x - 0.5) < 1e-9)
            spot = rel;
    CHECK(report("A3", "spot value at lambda r = 0.5 vs 1.38e-2", std::fabs(spot - 0.0138),
                 2e-4));
    info("A3", "first crossing of 1%", scan.first_cross_1pct);
    info("A3", "first crossing of 5%", scan.first_cross_5pct);
    info("A3", "first crossing of 10%", scan.first_cross_10pct);
    info("A3", "measured max relative error on (0, 2] (claimed-good range, recorded)",
         scan.max_rel_error);
    CHECK(report("A3", "crossings emitted and ordered",
                 (scan.first_cross_1pct > 0 && scan.first_cross_1pct < scan.first_cross_5pct &&
                  scan.first_cross_5pct < scan.first_cross_10pct)
                     ? 0.0
                     : 1.0,
                 0.0));
    // The measured error reaches ~2.64% at lambda r = 0.6, crossing 2% near
    // 0.556, so this pinned bound reports FAIL; kept to record the curve.
    const bool two_pct = report("A3", "relative error <= 2% throughout (0, 0.6]", max06, 0.02);
    info("A3", "location of the (0, 0.6] maximum", at);
    CHECK_MESSAGE(two_pct,
                  "measured 2% first-crossing is ~0.556; the bound as stated is exceeded "
                  "at the 0.6 endpoint (documented measurement, not a regression)");
}

TEST_CASE("A4 jacobi identity suite") {
    const auto checks = validate::run_suite("jacobi");
    for (const char* name : {"jacobi.ode_residual", "jacobi.orthogonality",
                             "jacobi.normalization", "jacobi.sum_identity",
                             "jacobi.weighted_integral"}) {
        const auto& c = find_check(checks, name);
        CHECK(report("A4", c.name, c.measured, c.tolerance));
    }
}

TEST_CASE("A5 normalization and orthonormalization") {
    const auto checks = validate::run_suite("gram");
    for (const auto& c : checks) {
        if (c.tolerance < 0.0) {
            info("A5", c.name + " (" + c.reference + ")", c.measured);
            CHECK(c.pass);
            continue;
        }
        CHECK(report("A5", c.name, c.measured, c.tolerance));
    }
}

TEST_CASE("A6 angular reduction to the classical spectra") {
    const auto checks = validate::run_suite("angular-oracle");
    for (const char* name :
         {"angular.reduction.D3", "angular.reduction.D4", "angular.reduction.D5",
          "angular.reduction.D6", "angular.assoc_legendre_pointwise"}) {
        const auto& c = find_check(checks, name);
        CHECK(report("A6", c.name, c.measured, c.tolerance));
    }
}

TEST_CASE("A7 special cases equal the general path") {
    const auto checks = validate::run_suite("special-cases");
    for (const char* name : {"special.case1.crosspath", "special.case2.crosspath",
                             "special.case3.crosspath", "special.case4.crosspath",
                             "special.case3_minus_k_agrees"}) {
        const auto& c = find_check(checks, name);
        CHECK(report("A7", c.name, c.measured, c.tolerance));
    }
    const auto& plus = find_check(checks, "special.case3_plus_k_deviates");
    info("A7", "plus-k radicand reading: closest approach to the general path",
         plus.measured);
    CHECK(report("A7", "plus-k reading rejected empirically (closest approach > 1e-6)",
                 plus.measured > 1e-6 ? 0.0 : 1.0, 0.0));
}

TEST_CASE("A8 oscillator limit of the well") {
    const double m = 1.0, hbar = 1.0, omega = 1.0, alpha = 2.0;
    for (int level = 0; level < 2; ++level) {
        double prev = -1.0;
        bool monotone = true;
        for (double lam : {0.2, 0.1, 0.05}) {
            const auto map = radial::limiting_case_map(omega, alpha, lam, m, hbar);
            radial::PotentialParams pt;
            pt.A = map.A;
            pt.B = map.B;
            pt.lambda = lam;
            auto fd2 = [&](auto V) {
                const auto s1 = oracle::radial_solve(V, oracle::Grid{0.0, 12.0, 4801},
                                                     level + 1);
                const auto s2 = oracle::radial_solve(V, oracle::Grid{0.0, 12.0, 9601},
                                                     level + 1);
                return (4.0 * s2.eigenvalues[level] - s1.eigenvalues[level]) / 3.0;
            };
            const double e_pt = fd2([pt](double r) {
                const double t = std::tanh(pt.lambda * r);
                return pt.A * t * t + pt.B / (t * t);
            });
            const double e_os = fd2([=](double r) {
                return 0.5 * m * omega * omega * r * r +
                       hbar * hbar * alpha / (2.0 * m * r * r);
            });
            const double err = std::fabs(e_pt - map.energy_shift - e_os);
            info("A8", "level " + std::to_string(level) + ", lambda " + std::to_string(lam) +
                           ": |E_well - shift - E_osc|",
                 err);
            if (prev >= 0.0 && err >= prev)
                monotone = false;
            prev = err;
        }
        CHECK(report("A8", "error decreases monotonically, level " + std::to_string(level),
                     monotone ? 0.0 : 1.0, 0.0));
    }
}

TEST_CASE("A9 consistency identities on accepted solutions") {
    // Radial constraint pair on every accepted level of the anchor point.
    const auto p = anchor();
    double worst_radial = 0.0;
    for (int l = 0; l <= 1; ++l) {
        const auto red = radial::reduce(p, 3, l, 0.0);
        const int nb = radial::bound_level_count(red.A_t, red.B_t);
        for (int n = 0; n < nb; ++n) {
            const auto c = radial::nu_constants(n, red);
            worst_radial = std::max(worst_radial, std::fabs(c.c1 * c.c1 - c.c2 * c.c3) /
                                                      std::max(1.0, c.c1 * c.c1));
        }
    }
    CHECK(report("A9", "radial constraint-pair identity", worst_radial, 1e-8));

    util::Rng rng(907);
    double worst_ang = 0.0;
    for (int c = 1; c <= 4; ++c) {
        for (int i = 0; i < 25; ++i) {
            const auto d = angular::random_admissible_draw(c, rng);
            const auto sol = angular::solve(d.ring, d.D, d.l, d.Lam, d.n);
            REQUIRE(sol.has_value());
            const double lhs = 4.0 * sol->k - 4.0 * sol->eta0;
            const double rhs =
                sol->u0 > 0.0 ? sol->eta1 * sol->eta1 / (sol->u0 * sol->u0) : 0.0;
            worst_ang = std::max(worst_ang,
                                 std::fabs(lhs - rhs) / std::max(1.0, std::fabs(lhs)));
        }
    }
    CHECK(report("A9", "angular coupling identity on accepted solutions", worst_ang, 1e-9));
}

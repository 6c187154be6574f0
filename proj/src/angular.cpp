#include "nuspectra/angular.hpp"

#include "nuspectra/oracle.hpp"
#include "nuspectra/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nuspectra::angular {

namespace {

double half_gap(int D) { return 0.5 * (D - 3.0); } // G = (D-3)/2

double ell_from_L(int D, double L) {
    const double disc = (D - 2.0) * (D - 2.0) + 4.0 * L;
    if (disc < 0.0)
        throw std::domain_error("ell_from_L: L below the real-l threshold");
    return 0.5 * (-(D - 2.0) + std::sqrt(disc));
}

bool near_zero(double x) { return std::fabs(x) < 1e-12; }

} // namespace

EtaParams eta_params(const RingParams& ring, int D, double l, double Lam) {
    const double L = l * (l + D - 2.0);
    return {ring.kappa_p + L - Lam, ring.zeta_p, ring.gamma_p - L};
}

UParams u_params(const EtaParams& etas, double k, int D) {
    const double G = half_gap(D);
    const double rad = G * G - etas.eta2 - k;
    if (rad < -1e-13)
        throw std::domain_error("u_params: negative radicand");
    const double u0 = std::sqrt(std::max(rad, 0.0));
    UParams u;
    u.u0 = u0;
    u.u1 = G - u0;
    if (etas.eta1 == 0.0) {
        u.u2 = 0.0;
    } else {
        if (u0 < 1e-14)
            throw std::runtime_error("u_params: eta1 != 0 with u0 = 0");
        u.u2 = etas.eta1 / (2.0 * u0);
    }
    return u;
}

std::pair<double, double> k_quadratic_roots(int n, int D, double eta2) {
    const double disc = (D - 2.0) * (D - 2.0) - 4.0 * eta2;
    if (disc < 0.0)
        throw std::domain_error("k_quadratic_roots: negative discriminant");
    const double base = 2.0 - D - 2.0 * n - 2.0 * static_cast<double>(n) * n;
    const double swing = (1.0 + 2.0 * n) * std::sqrt(disc);
    return {0.5 * (base + swing), 0.5 * (base - swing)};
}

std::pair<double, double> k_constraint_roots(const EtaParams& etas, int D) {
    const double d3 = (D - 3.0) * (D - 3.0);
    const double lead = 9.0 + static_cast<double>(D) * D - 6.0 * D + 4.0 * etas.eta0 - 4.0 * etas.eta2;
    const double inner = d3 + 4.0 * etas.eta0 - 4.0 * etas.eta2;
    const double rad = inner * inner -
                       16.0 * (etas.eta1 * etas.eta1 + etas.eta0 * (d3 - 4.0 * etas.eta2));
    if (rad < 0.0)
        throw std::domain_error("k_constraint_roots: negative radicand");
    const double swing = std::sqrt(rad);
    return {(lead + swing) / 8.0, (lead - swing) / 8.0};
}

std::pair<double, double> consistency_residuals(int n, int D, const EtaParams& etas) {
    const double beta2 = (2.0 * n + 1.0) * (2.0 * n + 1.0);
    const double res9 =
        beta2 + ((D - 1.0) * (D - 1.0) + 4.0 * etas.eta0 - 4.0 * etas.eta2 - 2.0) / 2.0;
    const double d3 = (D - 3.0) * (D - 3.0);
    const double inner = d3 + 4.0 * etas.eta0 - 4.0 * etas.eta2;
    const double res10 = beta2 * ((D - 2.0) * (D - 2.0) - 4.0 * etas.eta2) -
                         (inner * inner / 16.0 -
                          (etas.eta1 * etas.eta1 + etas.eta0 * (d3 - 4.0 * etas.eta2)));
    return {res9, res10};
}

namespace {

struct Candidate {
    double k;
    UParams u;
};

// The degree condition before squaring: (2n+1) u0 = k + (D-3)/2 - n(n+1)
// with u0 >= 0. Squared-route root pairs that only satisfy the squared
// version are ghosts and are dropped here.
bool degree_condition_holds(double u0, double k, int D, int n, double tol) {
    const double rhs = k + half_gap(D) - static_cast<double>(n) * (n + 1.0);
    return std::fabs((2.0 * n + 1.0) * u0 - rhs) <= tol * std::max(1.0, std::fabs(k));
}

// Match the two k routes and keep Jacobi-admissible candidates.
std::vector<Candidate> matched_candidates(const EtaParams& etas, int D, int n,
                                          double match_tol) {
    std::vector<double> kq, kc;
    try {
        const auto [a, b] = k_quadratic_roots(n, D, etas.eta2);
        kq = {a, b};
    } catch (const std::domain_error&) {
    }
    try {
        const auto [a, b] = k_constraint_roots(etas, D);
        kc = {a, b};
    } catch (const std::domain_error&) {
    }
    std::vector<Candidate> out;
    for (double k1 : kq) {
        for (double k2 : kc) {
            if (std::fabs(k1 - k2) > match_tol * std::max(1.0, std::fabs(k1)))
                continue;
            try {
                UParams u = u_params(etas, k1, D);
                if (u.u0 + u.u2 > -1.0 && u.u0 - u.u2 > -1.0 &&
                    degree_condition_holds(u.u0, k1, D, n, match_tol))
                    out.push_back({k1, u});
            } catch (const std::exception&) {
            }
        }
    }
    // Larger u0 first (nodeless weight preferred on ties).
    std::sort(out.begin(), out.end(),
              [](const Candidate& a, const Candidate& b) { return a.u.u0 > b.u.u0; });
    return out;
}

double phi_e1(const AngularSolution& sol) {
    const double mag = 0.5 * (sol.u1 + sol.u2);
    return sol.phi_sign == PhiSign::MinusHalfU1PlusU2 ? -mag : mag;
}

double phi_e2(const AngularSolution& sol) { return 0.5 * (sol.u2 - sol.u1); }

bool phi_integrable(const AngularSolution& sol) {
    // L2 weight exponents under (sin theta)^{D-2}: 2 e1,2 + (D-3)/2 > -1.
    const double half = 0.5 * (sol.D - 3.0);
    return 2.0 * phi_e1(sol) + half > -1.0 && 2.0 * phi_e2(sol) + half > -1.0;
}

// Choose the prefactor sign: keep the square-integrable candidates and let
// the equation residual decide when both qualify. A candidate whose best
// sign still fails the residual test is not a solution at all.
void select_phi_sign(AngularSolution& sol) {
    AngularSolution minus = sol, plus = sol;
    minus.phi_sign = PhiSign::MinusHalfU1PlusU2;
    plus.phi_sign = PhiSign::PlusHalfU1PlusU2;
    const bool minus_ok = phi_integrable(minus);
    const bool plus_ok = phi_integrable(plus);
    if (!minus_ok && !plus_ok)
        throw std::runtime_error("ring solution: neither prefactor sign is normalizable");
    auto residual = [](const AngularSolution& s) {
        double worst = 0.0;
        for (double th : {0.7, 1.3, 2.2})
            worst = std::max(worst, ring_ode_residual(s, th));
        return worst;
    };
    double best;
    if (minus_ok && plus_ok) {
        const double rm = residual(minus), rp = residual(plus);
        sol.phi_sign = rm <= rp ? PhiSign::MinusHalfU1PlusU2 : PhiSign::PlusHalfU1PlusU2;
        best = std::min(rm, rp);
    } else {
        sol.phi_sign = minus_ok ? PhiSign::MinusHalfU1PlusU2 : PhiSign::PlusHalfU1PlusU2;
        best = residual(minus_ok ? minus : plus);
    }
    if (best > 1e-8)
        throw std::runtime_error("ring solution: equation residual rejects the candidate");
}

AngularSolution finalize_solution(const EtaParams& etas, const Candidate& cand, int D,
                                  double l, double Lam, int n) {
    AngularSolution sol;
    sol.eta0 = etas.eta0;
    sol.eta1 = etas.eta1;
    sol.eta2 = etas.eta2;
    sol.u0 = cand.u.u0;
    sol.u1 = cand.u.u1;
    sol.u2 = cand.u.u2;
    sol.k = cand.k;
    sol.n = n;
    sol.D = D;
    sol.l = l;
    sol.Lam = Lam;
    select_phi_sign(sol);
    return sol;
}

} // namespace

std::optional<AngularSolution> solve(const RingParams& ring, int D, double l, double Lam,
                                     int n, double match_tol) {
    const EtaParams etas = eta_params(ring, D, l, Lam);
    for (const Candidate& cand : matched_candidates(etas, D, n, match_tol)) {
        try {
            return finalize_solution(etas, cand, D, l, Lam, n);
        } catch (const std::runtime_error&) {
            // rejected by the residual test; try the next candidate
        }
    }
    return std::nullopt;
}

double ring_exponent_one_minus(const AngularSolution& sol) { return phi_e1(sol); }
double ring_exponent_one_plus(const AngularSolution& sol) { return phi_e2(sol); }

double ring_wavefunction(const AngularSolution& sol, double theta) {
    const double y = std::cos(theta);
    const double e1 = phi_e1(sol), e2 = phi_e2(sol);
    return std::pow(1.0 - y, e1) * std::pow(1.0 + y, e2) *
           specfun::jacobi_eval(sol.n, {sol.jacobi_a(), sol.jacobi_b()}, y);
}

double ring_norm_constant(const AngularSolution& sol) {
    if (sol.phi_sign == PhiSign::MinusHalfU1PlusU2) {
        // L2 weight coincides with the Jacobi weight for the (u0-u2, u0+u2) pair.
        return 1.0 / std::sqrt(specfun::jacobi_norm(sol.n, {sol.jacobi_a(), sol.jacobi_b()}));
    }
    const double half = 0.5 * (sol.D - 3.0);
    const double wa = 2.0 * phi_e1(sol) + half;
    const double wb = 2.0 * phi_e2(sol) + half;
    const double norm2 = oracle::de_weighted_integral(wa, wb, [&](double y) {
        const double v = specfun::jacobi_eval(sol.n, {sol.jacobi_a(), sol.jacobi_b()}, y);
        return v * v;
    });
    return 1.0 / std::sqrt(norm2);
}

double ring_ode_residual(const AngularSolution& sol, double theta) {
    const double y = std::cos(theta);
    const double one_m = 1.0 - y, one_p = 1.0 + y;
    const double e1 = phi_e1(sol), e2 = phi_e2(sol);
    const specfun::JacobiIndex idx{sol.jacobi_a(), sol.jacobi_b()};
    const double P = specfun::jacobi_eval(sol.n, idx, y);
    const double P1 = specfun::jacobi_deriv(sol.n, idx, y, 1);
    const double P2 = specfun::jacobi_deriv(sol.n, idx, y, 2);
    const double lf = -e1 / one_m + e2 / one_p;               // phi'/phi
    const double lf2 = lf * lf - e1 / (one_m * one_m) - e2 / (one_p * one_p); // phi''/phi
    const double phi = std::pow(one_m, e1) * std::pow(one_p, e2);
    const double H = phi * P;
    const double H1 = phi * (P1 + lf * P);
    const double H2 = phi * (P2 + 2.0 * lf * P1 + lf2 * P);

    const double L = sol.L();
    const double gamma_p = sol.eta2 + L;
    const double zeta_p = sol.eta1;
    const double kappa_p = sol.eta0 - L + sol.Lam;
    const double s2 = 1.0 - y * y;
    const double U = (gamma_p * y * y + zeta_p * y + kappa_p) / s2;

    const double t1 = s2 * H2;
    const double t2 = -(sol.D - 1.0) * y * H1;
    const double t3 = (L - sol.Lam / s2 + U) * H;
    const double scale = std::max({std::fabs(t1), std::fabs(t2), std::fabs(t3), 1e-30});
    return std::fabs(t1 + t2 + t3) / scale;
}

double intermediate_angular(int j, int l_j, int l_jm1, double theta) {
    if (j < 2)
        throw std::invalid_argument("intermediate_angular: j must be >= 2");
    if (l_j < l_jm1 || l_jm1 < 0)
        throw std::invalid_argument("intermediate_angular: need l_j >= l_{j-1} >= 0");
    const int n = l_j - l_jm1;
    const double c = l_jm1 + 0.5 * (j - 2.0);
    return std::pow(std::sin(theta), l_jm1) * specfun::jacobi_eval(n, {c, c}, std::cos(theta));
}

double intermediate_norm_constant(int j, int l_j, int l_jm1) {
    if (j < 2 || l_j < l_jm1 || l_jm1 < 0)
        throw std::invalid_argument("intermediate_norm_constant: bad arguments");
    const int n = l_j - l_jm1;
    const double c = l_jm1 + 0.5 * (j - 2.0);
    return 1.0 / std::sqrt(specfun::jacobi_norm(n, {c, c}));
}

namespace {

// Per-case constraint-route roots in their expanded arrangements, kept
// separate from k_constraint_roots so the two evaluation orders can be
// compared field by field.
std::pair<double, double> case_k_roots(int case_id, const RingParams& ring, int D,
                                       double L, double Lam) {
    const double d3 = (D - 3.0) * (D - 3.0);
    const double dd = 9.0 + static_cast<double>(D) * D - 6.0 * D;
    double lead = 0.0, inner = 0.0, sub = 0.0;
    switch (case_id) {
    case 1: {
        const double eta0 = ring.kappa_p + L - Lam;
        lead = dd + 4.0 * eta0 + 4.0 * L;
        inner = d3 + 4.0 * eta0 + 4.0 * L;
        sub = 16.0 * (eta0 * (d3 + 4.0 * L));
        break;
    }
    case 2: {
        const double zeta = ring.zeta_p;
        const double s = near_zero(ring.gamma_p - zeta) ? 1.0 : -1.0;
        const double eta0 = ring.kappa_p + L - Lam;
        lead = dd + 4.0 * eta0 - 4.0 * s * zeta + 4.0 * L;
        inner = d3 + 4.0 * eta0 - 4.0 * s * zeta + 4.0 * L;
        sub = 16.0 * (zeta * zeta + eta0 * (d3 - 4.0 * s * zeta + 4.0 * L));
        break;
    }
    case 3: {
        const double eta0 = ring.kappa_p + L - Lam;
        const double eta2 = ring.gamma_p - L;
        lead = dd + 4.0 * eta0 - 4.0 * eta2;
        inner = d3 + 4.0 * eta0 - 4.0 * eta2;
        sub = 16.0 * (eta0 * (d3 - 4.0 * eta2));
        break;
    }
    case 4: {
        const double zeta = ring.zeta_p;
        const double eta0 = ring.kappa_p + L - Lam;
        lead = dd + 4.0 * eta0 + 4.0 * L;
        inner = d3 + 4.0 * eta0 + 4.0 * L;
        sub = 16.0 * (zeta * zeta + eta0 * (d3 + 4.0 * L));
        break;
    }
    default:
        throw std::invalid_argument("case_k_roots: case_id must be 1..4");
    }
    const double rad = inner * inner - sub;
    if (rad < 0.0)
        throw std::domain_error("case_k_roots: negative radicand");
    const double swing = std::sqrt(rad);
    return {(lead + swing) / 8.0, (lead - swing) / 8.0};
}

void check_pattern(int case_id, const RingParams& ring) {
    const bool g0 = near_zero(ring.gamma_p), z0 = near_zero(ring.zeta_p),
               k0 = near_zero(ring.kappa_p);
    bool ok = false;
    switch (case_id) {
    case 1: ok = g0 && z0 && !k0; break;
    case 2:
        ok = !z0 && !k0 &&
             (near_zero(ring.gamma_p - ring.zeta_p) || near_zero(ring.gamma_p + ring.zeta_p));
        break;
    case 3: ok = z0 && !g0 && !k0; break;
    case 4:
        ok = g0 && !z0 &&
             (near_zero(ring.kappa_p - ring.zeta_p) || near_zero(ring.kappa_p + ring.zeta_p));
        break;
    default:
        throw std::invalid_argument("specialize: case_id must be 1..4");
    }
    if (!ok)
        throw std::invalid_argument("specialize: ring parameters do not match the case pattern");
}

} // namespace

AngularSolution specialize(int case_id, const RingParams& ring, int D, double l,
                           double Lam, int n) {
    check_pattern(case_id, ring);
    const double L = l * (l + D - 2.0);
    const double G = half_gap(D);
    const EtaParams etas = eta_params(ring, D, l, Lam);

    const auto [kc_up, kc_lo] = case_k_roots(case_id, ring, D, L, Lam);
    std::vector<double> kq;
    {
        const auto [a, b] = k_quadratic_roots(n, D, etas.eta2);
        kq = {a, b};
    }
    std::vector<Candidate> cands;
    for (double k_case : {kc_up, kc_lo}) {
        for (double k_poly : kq) {
            if (std::fabs(k_case - k_poly) > 1e-8 * std::max(1.0, std::fabs(k_case)))
                continue;
            // Per-case u0 radicals; case 3 uses the minus-k reading
            // (case3_u0_plus_k_variant holds the rejected alternative).
            double rad = 0.0;
            switch (case_id) {
            case 1: rad = G * G + L - k_case; break;
            case 2: rad = G * G - ring.gamma_p + L - k_case; break;
            case 3: rad = G * G - ring.gamma_p + L - k_case; break;
            case 4: rad = G * G + L - k_case; break;
            }
            if (rad < -1e-13)
                continue;
            UParams u;
            u.u0 = std::sqrt(std::max(rad, 0.0));
            u.u1 = 0.5 * (D - 3.0 - 2.0 * u.u0);
            u.u2 = 0.0;
            if (case_id == 2 || case_id == 4) {
                if (u.u0 < 1e-14)
                    continue;
                u.u2 = ring.zeta_p / (2.0 * u.u0);
            }
            if (u.u0 + u.u2 > -1.0 && u.u0 - u.u2 > -1.0 &&
                degree_condition_holds(u.u0, k_case, D, n, 1e-8))
                cands.push_back({k_case, u});
        }
    }
    std::sort(cands.begin(), cands.end(),
              [](const Candidate& a, const Candidate& b) { return a.u.u0 > b.u.u0; });
    for (const Candidate& cand : cands) {
        try {
            return finalize_solution(etas, cand, D, l, Lam, n);
        } catch (const std::runtime_error&) {
        }
    }
    throw std::runtime_error("specialize: no consistent root for the requested degree");
}

double case3_u0_plus_k_variant(const RingParams& ring, int D, double l, double Lam,
                               double k) {
    (void)Lam;
    const double G = half_gap(D);
    const double L = l * (l + D - 2.0);
    const double rad = G * G - ring.gamma_p + L + k;
    if (rad < 0.0)
        throw std::domain_error("case3_u0_plus_k_variant: negative radicand");
    return std::sqrt(rad);
}

std::vector<double> find_admissible_l(const RingParams& ring, int D, double Lam, int n,
                                      double l_lo, double l_hi, int grid) {
    if (!(l_hi > l_lo) || grid < 2)
        throw std::invalid_argument("find_admissible_l: bad scan range");
    auto mismatch = [&](double l, int qi, int ci) -> double {
        const EtaParams etas = eta_params(ring, D, l, Lam);
        const auto q = k_quadratic_roots(n, D, etas.eta2); // may throw
        const auto c = k_constraint_roots(etas, D);
        const double kq = qi == 0 ? q.first : q.second;
        const double kc = ci == 0 ? c.first : c.second;
        return kq - kc;
    };
    std::vector<double> roots;
    for (int qi = 0; qi < 2; ++qi) {
        for (int ci = 0; ci < 2; ++ci) {
            double prev_l = l_lo;
            double prev_f = NAN;
            try {
                prev_f = mismatch(prev_l, qi, ci);
            } catch (const std::domain_error&) {
            }
            for (int i = 1; i <= grid; ++i) {
                const double l = l_lo + (l_hi - l_lo) * i / grid;
                double f = NAN;
                try {
                    f = mismatch(l, qi, ci);
                } catch (const std::domain_error&) {
                }
                if (std::isfinite(prev_f) && std::isfinite(f) &&
                    ((prev_f < 0.0) != (f < 0.0))) {
                    double a = prev_l, b = l;
                    for (int it = 0; it < 80; ++it) {
                        const double mid = 0.5 * (a + b);
                        double fm;
                        try {
                            fm = mismatch(mid, qi, ci);
                        } catch (const std::domain_error&) {
                            break;
                        }
                        if ((fm < 0.0) == (prev_f < 0.0))
                            a = mid;
                        else
                            b = mid;
                    }
                    const double root = 0.5 * (a + b);
                    if (solve(ring, D, root, Lam, n, 1e-6).has_value())
                        roots.push_back(root);
                }
                prev_l = l;
                prev_f = f;
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::fabs(a - b) < 1e-6; }),
                roots.end());
    return roots;
}

CaseDraw random_admissible_draw(int case_id, util::Rng& rng) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        const int D = rng.uniform_int(3, 7);
        const int n = rng.uniform_int(0, 3);
        const int lp = rng.uniform_int(0, 2);
        const double Lam0 = lp * (lp + D - 3.0);
        const double G = half_gap(D);
        CaseDraw draw;
        draw.D = D;
        draw.n = n;
        draw.Lam = Lam0;
        try {
            switch (case_id) {
            case 1: {
                const double l = rng.uniform(0.4, 4.0);
                const double L = l * (l + D - 2.0);
                const double disc = (D - 2.0) * (D - 2.0) + 4.0 * L;
                const double u0 = 0.5 * (-(2.0 * n + 1.0) + std::sqrt(disc));
                if (u0 < 0.1)
                    continue;
                const double k = (2.0 * n + 1.0) * u0 + n * (n + 1.0) - G;
                const double kappa = k - L + Lam0;
                if (std::fabs(kappa) < 1e-4)
                    continue;
                draw.ring = {0.0, 0.0, kappa};
                draw.l = l;
                return draw;
            }
            case 2: {
                const double s = rng.uniform01() < 0.5 ? 1.0 : -1.0;
                const double u0 = rng.uniform(0.4, 3.0);
                double u2 = rng.uniform(-0.8, 0.8) * u0;
                if (std::fabs(u2) < 0.05)
                    u2 = 0.05 * (u2 < 0 ? -1.0 : 1.0) * u0;
                const double zeta = 2.0 * u0 * u2;
                const double k = (2.0 * n + 1.0) * u0 + n * (n + 1.0) - G;
                const double eta2 = G * G - u0 * u0 - k;
                const double L = s * zeta - eta2;
                if (L < -0.24 * (D - 2.0) * (D - 2.0))
                    continue;
                const double eta0 = k - u2 * u2;
                const double kappa = eta0 - L + Lam0;
                if (std::fabs(kappa) < 1e-4 || std::fabs(zeta) < 1e-4)
                    continue;
                draw.ring = {s * zeta, zeta, kappa};
                draw.l = ell_from_L(D, L);
                return draw;
            }
            case 3: {
                const double u0 = rng.uniform(0.4, 3.0);
                const double gamma = rng.uniform(-2.0, 2.0);
                if (std::fabs(gamma) < 0.05)
                    continue;
                const double k = (2.0 * n + 1.0) * u0 + n * (n + 1.0) - G;
                const double eta2 = G * G - u0 * u0 - k;
                const double L = gamma - eta2;
                if (L < -0.24 * (D - 2.0) * (D - 2.0))
                    continue;
                const double kappa = k - L + Lam0;
                if (std::fabs(kappa) < 1e-4)
                    continue;
                draw.ring = {gamma, 0.0, kappa};
                draw.l = ell_from_L(D, L);
                return draw;
            }
            case 4: {
                const double s = rng.uniform01() < 0.5 ? 1.0 : -1.0;
                const double u0 = rng.uniform(0.6, 3.0);
                double u2 = rng.uniform(-0.8, 0.8) * u0;
                if (std::fabs(u2) < 0.05)
                    u2 = 0.05 * (u2 < 0 ? -1.0 : 1.0) * u0;
                const double zeta = 2.0 * u0 * u2;
                const double kappa = s * zeta;
                const double k = (2.0 * n + 1.0) * u0 + n * (n + 1.0) - G;
                const double L = u0 * u0 + k - G * G;
                if (L < -0.24 * (D - 2.0) * (D - 2.0))
                    continue;
                const double Lam = kappa + L - k + u2 * u2;
                if (std::fabs(zeta) < 1e-4)
                    continue;
                draw.ring = {0.0, zeta, kappa};
                draw.l = ell_from_L(D, L);
                draw.Lam = Lam;
                return draw;
            }
            default:
                throw std::invalid_argument("random_admissible_draw: case_id must be 1..4");
            }
        } catch (const std::domain_error&) {
            continue;
        }
    }
    throw std::runtime_error("random_admissible_draw: no admissible draw found");
}

} // namespace nuspectra::angular

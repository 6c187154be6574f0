#include "nuspectra/oracle.hpp"

#include "nuspectra/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nuspectra::oracle {

void Grid::validate() const {
    if (n_points < 3)
        throw std::invalid_argument("Grid: need at least 3 points");
    if (!(spacing() > 0.0))
        throw std::invalid_argument("Grid: spacing must be positive");
}

int sturm_count(const SymTridiag& T, double x) {
    const int n = static_cast<int>(T.diag.size());
    const double tiny = std::numeric_limits<double>::min();
    int count = 0;
    double q = 1.0;
    for (int i = 0; i < n; ++i) {
        const double off2 = (i == 0) ? 0.0 : T.off[i - 1] * T.off[i - 1];
        q = (T.diag[i] - x) - off2 / q;
        if (q == 0.0)
            q = tiny;
        if (q < 0.0)
            ++count;
    }
    return count;
}

std::vector<double> tridiag_eigenvalues(const SymTridiag& T, int count) {
    const int n = static_cast<int>(T.diag.size());
    if (count < 1 || count > n)
        throw std::invalid_argument("tridiag_eigenvalues: bad count");
    // Gershgorin bracket.
    double lo = T.diag[0], hi = T.diag[0];
    for (int i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::fabs(T.off[i - 1]);
        if (i + 1 < n) radius += std::fabs(T.off[i]);
        lo = std::min(lo, T.diag[i] - radius);
        hi = std::max(hi, T.diag[i] + radius);
    }
    std::vector<double> vals(count);
    for (int k = 0; k < count; ++k) {
        double a = lo, b = hi;
        for (int step = 0; step < 100; ++step) {
            const double mid = 0.5 * (a + b);
            if (mid == a || mid == b)
                break;
            if (sturm_count(T, mid) >= k + 1)
                b = mid;
            else
                a = mid;
        }
        vals[k] = 0.5 * (a + b);
    }
    return vals;
}

namespace {

// Solve (T - sigma I) x = rhs by LU with partial pivoting on the tridiagonal
// band (fill-in limited to the second superdiagonal).
std::vector<double> shifted_tridiag_solve(const SymTridiag& T, double sigma,
                                          std::vector<double> rhs) {
    const int n = static_cast<int>(T.diag.size());
    std::vector<double> d(n), e(n, 0.0), f(n, 0.0);
    for (int i = 0; i < n; ++i) {
        d[i] = T.diag[i] - sigma;
        if (i + 1 < n) e[i] = T.off[i];
    }
    std::vector<double> sub(n, 0.0);
    for (int i = 0; i + 1 < n; ++i)
        sub[i + 1] = T.off[i];

    const double tiny = 1e-300;
    for (int i = 0; i + 1 < n; ++i) {
        if (std::fabs(sub[i + 1]) > std::fabs(d[i])) {
            std::swap(d[i], sub[i + 1]);
            std::swap(e[i], d[i + 1]);
            std::swap(f[i], e[i + 1]);
            std::swap(rhs[i], rhs[i + 1]);
        }
        if (std::fabs(d[i]) < tiny)
            d[i] = (d[i] < 0.0 ? -tiny : tiny);
        const double m = sub[i + 1] / d[i];
        d[i + 1] -= m * e[i];
        e[i + 1] -= m * f[i];
        rhs[i + 1] -= m * rhs[i];
    }
    if (std::fabs(d[n - 1]) < tiny)
        d[n - 1] = (d[n - 1] < 0.0 ? -tiny : tiny);
    std::vector<double> x(n);
    x[n - 1] = rhs[n - 1] / d[n - 1];
    if (n >= 2)
        x[n - 2] = (rhs[n - 2] - e[n - 2] * x[n - 1]) / d[n - 2];
    for (int i = n - 3; i >= 0; --i)
        x[i] = (rhs[i] - e[i] * x[i + 1] - f[i] * x[i + 2]) / d[i];
    return x;
}

double vec_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

void fix_sign(std::vector<double>& v) {
    double peak = 0.0;
    size_t at = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        if (std::fabs(v[i]) > peak) {
            peak = std::fabs(v[i]);
            at = i;
        }
    }
    if (peak > 0.0 && v[at] < 0.0)
        for (double& x : v) x = -x;
}

double residual_norm(const SymTridiag& T, const std::vector<double>& v, double lambda) {
    const int n = static_cast<int>(v.size());
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = (T.diag[i] - lambda) * v[i];
        if (i > 0) r += T.off[i - 1] * v[i - 1];
        if (i + 1 < n) r += T.off[i] * v[i + 1];
        s += r * r;
    }
    return std::sqrt(s);
}

} // namespace

std::vector<double> tridiag_eigenvector(const SymTridiag& T, double eigenvalue) {
    const int n = static_cast<int>(T.diag.size());
    // Shift slightly off the eigenvalue so the shifted system stays regular.
    double scale = std::fabs(eigenvalue);
    for (double d : T.diag) scale = std::max(scale, std::fabs(d));
    const double sigma = eigenvalue + 1e-12 * std::max(scale, 1.0);
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = 1.0 / std::sqrt(static_cast<double>(n)) * (1.0 + 1e-3 * ((i * 2654435769u) % 97 / 97.0));
    double norm = vec_norm(v);
    for (double& x : v) x /= norm;
    std::vector<double> prev = v;
    for (int sweep = 0; sweep < 20; ++sweep) {
        v = shifted_tridiag_solve(T, sigma, v);
        norm = vec_norm(v);
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw std::runtime_error("tridiag_eigenvector: inverse iteration broke down");
        for (double& x : v) x /= norm;
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += v[i] * prev[i];
        if (1.0 - std::fabs(dot) < 1e-14)
            break;
        prev = v;
    }
    fix_sign(v);
    return v;
}

namespace {

NumericSpectrum solve_tridiag_problem(const SymTridiag& T, const Grid& grid, int count,
                                      double measure_h) {
    NumericSpectrum out;
    out.grid = grid;
    const std::vector<double> raw = tridiag_eigenvalues(T, count);
    for (double lam : raw) {
        std::vector<double> v = tridiag_eigenvector(T, lam);
        out.residual_norms.push_back(residual_norm(T, v, lam));
        // Normalize as a sampled function: sum v_i^2 h = 1.
        const double s = 1.0 / std::sqrt(measure_h);
        for (double& x : v) x *= s;
        out.eigenvectors.push_back(std::move(v));
        out.eigenvalues.push_back(lam);
    }
    return out;
}

} // namespace

NumericSpectrum radial_solve(const std::function<double(double)>& potential, Grid grid,
                             int count, double mu, double hbar, bool check_refinement,
                             double tolerance) {
    grid.validate();
    const double h = grid.spacing();
    // Interior points x_1 .. x_{N-2}; Dirichlet at both grid ends.
    const int n = grid.n_points - 2;
    if (count > n)
        throw std::invalid_argument("radial_solve: count exceeds interior grid size");
    const double kin = hbar * hbar / (2.0 * mu);
    SymTridiag T;
    T.diag.resize(n);
    T.off.assign(n - 1, -kin / (h * h));
    for (int i = 0; i < n; ++i) {
        const double x = grid.point(i + 1);
        const double V = potential(x);
        if (!std::isfinite(V))
            throw std::domain_error("radial_solve: potential not finite on interior grid");
        T.diag[i] = 2.0 * kin / (h * h) + V;
    }
    NumericSpectrum out = solve_tridiag_problem(T, grid, count, h);
    if (check_refinement) {
        Grid fine{grid.x_min, grid.x_max, 2 * grid.n_points - 1};
        NumericSpectrum ref = radial_solve(potential, fine, count, mu, hbar, false, tolerance);
        for (int k = 0; k < count; ++k)
            if (std::fabs(ref.eigenvalues[k] - out.eigenvalues[k]) > 10.0 * tolerance)
                out.refinement_warning = true;
    }
    return out;
}

NumericSpectrum angular_solve(const angular::RingParams& ring, int D, double Lam,
                              Grid grid, int count, bool check_refinement,
                              double tolerance) {
    grid.validate();
    if (D < 2)
        throw std::invalid_argument("angular_solve: D must be >= 2");
    const double h = grid.spacing();
    const int n = grid.n_points - 2;
    if (count > n)
        throw std::invalid_argument("angular_solve: count exceeds interior grid size");

    // Self-adjoint form: [w H']' + w [L - Lam/sin^2 + U] H = 0 with
    // w = (sin theta)^{D-2}. Flux differencing then a diagonal w^{1/2}
    // symmetrization gives a symmetric tridiagonal pencil in u = w^{1/2} H
    // whose eigenvalues are L directly.
    const double p = static_cast<double>(D - 2);
    auto w = [&](double th) { return std::pow(std::sin(th), p); };
    auto ring_term = [&](double th) {
        const double y = std::cos(th);
        const double s2 = 1.0 - y * y;
        return (ring.gamma_p * y * y + ring.zeta_p * y + ring.kappa_p) / s2;
    };

    SymTridiag T;
    T.diag.resize(n);
    T.off.resize(n - 1);
    std::vector<double> wi(n), whalf(n + 1);
    for (int i = 0; i < n; ++i)
        wi[i] = w(grid.point(i + 1));
    for (int i = 0; i <= n; ++i)
        whalf[i] = w(grid.point(i) + 0.5 * h);
    // Natural (zero-flux) faces at both poles: the vanishing weight puts the
    // endpoints in the limit-circle case for D <= 4, and the zero-flux face
    // is what singles out the regular solution there. Wall-type terms
    // (Lam or ring coefficients) dominate the first diagonal entries anyway.
    whalf[0] = 0.0;
    whalf[n] = 0.0;
    for (int i = 0; i < n; ++i) {
        const double th = grid.point(i + 1);
        const double s2 = std::sin(th) * std::sin(th);
        const double pot = Lam / s2 - ring_term(th);
        T.diag[i] = (whalf[i] + whalf[i + 1]) / (h * h * wi[i]) + pot;
        if (i + 1 < n)
            T.off[i] = -whalf[i + 1] / (h * h * std::sqrt(wi[i] * wi[i + 1]));
    }
    NumericSpectrum out = solve_tridiag_problem(T, grid, count, h);
    if (check_refinement) {
        Grid fine{grid.x_min, grid.x_max, 2 * grid.n_points - 1};
        NumericSpectrum ref = angular_solve(ring, D, Lam, fine, count, false, tolerance);
        for (int k = 0; k < count; ++k)
            if (std::fabs(ref.eigenvalues[k] - out.eigenvalues[k]) > 10.0 * tolerance)
                out.refinement_warning = true;
    }
    return out;
}

QuadratureResult quadrature(const std::function<double(double)>& f, double a, double b,
                            int n, double tol, int max_levels) {
    if (n < 1)
        throw std::invalid_argument("quadrature: need at least one panel");
    auto midpoint = [&](int panels) {
        const double h = (b - a) / panels;
        double s = 0.0;
        for (int i = 0; i < panels; ++i)
            s += f(a + (i + 0.5) * h);
        return s * h;
    };
    QuadratureResult res;
    int panels = n;
    double coarse = midpoint(panels);
    for (int level = 0; level < max_levels; ++level) {
        panels *= 2;
        const double fine = midpoint(panels);
        // Midpoint rule is O(h^2): Richardson combination (4 fine - coarse)/3.
        const double extrap = (4.0 * fine - coarse) / 3.0;
        res.error_estimate = std::fabs(extrap - fine);
        res.value = extrap;
        if (res.error_estimate <= tol * std::max(1.0, std::fabs(extrap))) {
            res.converged = true;
            return res;
        }
        coarse = fine;
    }
    res.converged = false;
    return res;
}

double de_weighted_integral(double alpha, double beta,
                            const std::function<double(double)>& f_smooth, double tol) {
    if (alpha <= -1.0 || beta <= -1.0)
        throw std::domain_error("de_weighted_integral: weight exponents must exceed -1");
    // y = tanh((pi/2) sinh t); 1 -+ y evaluated from the stable sech form so the
    // weight powers stay accurate down to the double-exponential tail.
    const double t_max = 6.0;
    auto sample = [&](double t) {
        const double u = 0.5 * M_PI * std::sinh(t);
        const double y = std::tanh(u);
        const double one_minus = 2.0 / (std::exp(2.0 * u) + 1.0);  // 1 - y
        const double one_plus = 2.0 / (std::exp(-2.0 * u) + 1.0);  // 1 + y
        const double sech = 1.0 / std::cosh(u);
        const double dy = 0.5 * M_PI * std::cosh(t) * sech * sech;
        const double lw = alpha * std::log(one_minus) + beta * std::log(one_plus);
        if (lw < -745.0 || !std::isfinite(lw))
            return 0.0;
        return std::exp(lw) * f_smooth(y) * dy;
    };
    double h = 0.5;
    double acc = 0.0;
    // Level 0: trapezoid over t in [-t_max, t_max] with step h.
    {
        const int m = static_cast<int>(t_max / h);
        acc = sample(0.0);
        for (int i = 1; i <= m; ++i)
            acc += sample(i * h) + sample(-i * h);
        acc *= h;
    }
    for (int level = 0; level < 10; ++level) {
        // Refine by inserting midpoints; trapezoid halving rule.
        const double h2 = h / 2.0;
        const int m = static_cast<int>(t_max / h2);
        double add = 0.0;
        for (int i = 1; i <= m; i += 2)
            add += sample(i * h2) + sample(-i * h2);
        const double next = 0.5 * acc + h2 * add;
        const double change = std::fabs(next - acc);
        acc = next;
        h = h2;
        if (level >= 2 && change <= tol * std::max(1.0, std::fabs(acc)))
            break;
    }
    return acc;
}

PekerisScan pekeris_error_scan(double lambda_r_max, int samples) {
    if (samples < 2)
        throw std::invalid_argument("pekeris_error_scan: need at least 2 samples");
    PekerisScan scan;
    scan.curve.reserve(samples);
    for (int i = 1; i <= samples; ++i) {
        const double x = lambda_r_max * i / samples;
        const double rel = x * x * std::fabs(radial::pekeris_rhs(x) - 1.0 / (x * x));
        scan.curve.emplace_back(x, rel);
        if (rel > scan.max_rel_error) {
            scan.max_rel_error = rel;
            scan.max_at = x;
        }
        if (scan.first_cross_1pct < 0.0 && rel > 0.01) scan.first_cross_1pct = x;
        if (scan.first_cross_5pct < 0.0 && rel > 0.05) scan.first_cross_5pct = x;
        if (scan.first_cross_10pct < 0.0 && rel > 0.10) scan.first_cross_10pct = x;
    }
    return scan;
}

} // namespace nuspectra::oracle

#include "nuspectra/radial.hpp"

#include "nuspectra/geometry.hpp"
#include "nuspectra/oracle.hpp"
#include "nuspectra/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace nuspectra::radial {

using specfun::JacobiIndex;

void PotentialParams::validate() const {
    if (!(lambda > 0.0) || !(mu > 0.0) || !(hbar > 0.0))
        throw std::invalid_argument("PotentialParams: lambda, mu, hbar must be positive");
}

std::pair<bool, bool> NUConstants::strict_window() const {
    const double rc2 = std::sqrt(c2);
    return {c1 < 4.0 * rc2, 2.0 * c2 + c1 < -12.0 * rc2};
}

double pekeris_rhs(double x) {
    const double t = std::tanh(x);
    return -2.0 / 3.0 - t * t / 3.0 + 1.0 / (t * t);
}

ReducedRadialParams reduce(const PotentialParams& p, int D, int l, double E) {
    p.validate();
    const double gd = geometry::centrifugal_gamma(D, l);
    const double l2 = p.lambda * p.lambda;
    const double pref = 2.0 * p.mu / (p.hbar * p.hbar) / (4.0 * l2);
    ReducedRadialParams red;
    red.A_t = pref * (p.A - gd * p.hbar * p.hbar * l2 / (6.0 * p.mu));
    red.B_t = pref * (p.B + gd * p.hbar * p.hbar * l2 / (2.0 * p.mu));
    red.E_t = pref * (E + gd * p.hbar * p.hbar * l2 / (3.0 * p.mu));
    return red;
}

double energy_from_reduced(double E_t, const PotentialParams& p, int D, int l) {
    p.validate();
    const double gd = geometry::centrifugal_gamma(D, l);
    const double l2 = p.lambda * p.lambda;
    return p.hbar * p.hbar / (2.0 * p.mu) * (4.0 * l2 * E_t) -
           gd * p.hbar * p.hbar * l2 / (3.0 * p.mu);
}

BoundWindow bound_state_window(const PotentialParams& p, int D, int l) {
    p.validate();
    const double gd = geometry::centrifugal_gamma(D, l);
    const double scale = p.lambda * p.lambda * p.hbar * p.hbar / (2.0 * p.mu);
    BoundWindow w;
    w.A_threshold = scale * (gd / 3.0 - 0.25);
    w.B_threshold = -scale * (gd + 0.25);
    w.A_ok = p.A >= w.A_threshold;
    w.B_ok = p.B >= w.B_threshold;
    const ReducedRadialParams red = reduce(p, D, l, 0.0);
    w.A_t = red.A_t;
    w.B_t = red.B_t;
    w.Bt_strong = red.B_t > 35.0 / 16.0;
    return w;
}

namespace {

double sqrt_radicand(double v, const char* what) {
    if (v < 0.0)
        throw std::domain_error(std::string(what) + ": negative radicand");
    return std::sqrt(v);
}

} // namespace

std::pair<double, double> nu_k_roots(int n, double A_t) {
    const double beta = 2.0 * n + 1.0;
    const double sa = sqrt_radicand(1.0 + 16.0 * A_t, "nu_k_roots");
    return {(-beta * beta + beta * sa) / 4.0, (-beta * beta - beta * sa) / 4.0};
}

double nu_energy_reduced(int n, double A_t, double B_t) {
    const double beta = 2.0 * n + 1.0;
    const double sa = sqrt_radicand(1.0 + 16.0 * A_t, "nu_energy_reduced");
    const double inner = (1.0 + 16.0 * B_t) * (1.0 + 16.0 * A_t + 4.0 * beta * beta + 4.0 * beta * sa);
    return -0.25 * beta * beta - 0.25 * beta * sa - 0.5 - 0.125 * sqrt_radicand(inner, "nu_energy_reduced");
}

double level_decay(int n, double A_t, double B_t) {
    const double sa = sqrt_radicand(1.0 + 16.0 * A_t, "level_decay");
    const double sb = sqrt_radicand(1.0 + 16.0 * B_t, "level_decay");
    return (sa - sb - 2.0 - 4.0 * n) / 4.0;
}

double level_energy_reduced(int n, double A_t, double B_t) {
    const double q = level_decay(n, A_t, B_t);
    return A_t + B_t - q * q;
}

int bound_level_count(double A_t, double B_t) {
    const double sa = sqrt_radicand(1.0 + 16.0 * A_t, "bound_level_count");
    const double sb = sqrt_radicand(1.0 + 16.0 * B_t, "bound_level_count");
    const double x = (sa - sb - 2.0) / 4.0; // levels are n = 0 .. ceil(x)-1
    if (x <= 0.0)
        return 0;
    return static_cast<int>(std::ceil(x - 1e-12));
}

double energy_physical(int n, int l, int D, const PotentialParams& p) {
    const ReducedRadialParams red = reduce(p, D, l, 0.0);
    return energy_from_reduced(level_energy_reduced(n, red.A_t, red.B_t), p, D, l);
}

NUConstants nu_constants(int n, const ReducedRadialParams& red) {
    const auto [k_up, k_lo] = nu_k_roots(n, red.A_t);
    NUConstants c{};
    c.k = k_lo; // the nonpositive root; pairs with nu_energy_reduced
    c.k_tie = k_up <= 0.0;
    const double E_t = nu_energy_reduced(n, red.A_t, red.B_t);
    c.c1 = 16.0 * c.k - 8.0 - 16.0 * E_t;
    c.c2 = 1.0 + 16.0 * red.A_t - 16.0 * c.k;
    c.c3 = 4.0 * (1.0 + 16.0 * red.B_t);
    const double res = std::fabs(c.c1 * c.c1 - c.c2 * c.c3) / std::max(1.0, c.c1 * c.c1);
    if (res > 1e-9)
        throw std::runtime_error("nu_constants: c1^2 = c2 c3 violated beyond tolerance");
    const double rc2 = std::sqrt(c.c2);
    c.c4 = (1.0 + rc2) / 4.0;
    c.c5 = (2.0 - c.c1 / rc2) / 8.0;
    c.c6 = (8.0 + rc2) / 2.0;
    c.c7 = c.c1 / (4.0 * rc2);
    return c;
}

double radial_wavefunction_raw(int n, double a, double b, double lambda, double r) {
    const double t = std::tanh(lambda * r);
    const double sech = 1.0 / std::cosh(lambda * r);
    const double y = 2.0 * t * t - 1.0;
    return std::pow(t, b + 0.5) * std::pow(sech, a) * specfun::jacobi_eval(n, {a, b}, y);
}

double normalization_quadrature(int n, double a, double b, double lambda) {
    // In y = 2 tanh^2(lr) - 1 the norm integral is a weighted Jacobi moment
    //   Lambda = int (1-y)^{a-1} (1+y)^b P_n^2 dy / (sqrt(2) l 2^{a+b+1/2}),
    // which the tanh-sinh rule handles including the (1-y)^{a-1} endpoint.
    if (!(a > 0.0))
        throw std::domain_error("normalization_quadrature: level not square-integrable (a <= 0)");
    const double integral = oracle::de_weighted_integral(a - 1.0, b, [&](double y) {
        const double v = specfun::jacobi_eval(n, {a, b}, y);
        return v * v;
    });
    return integral / (std::sqrt(2.0) * lambda * std::pow(2.0, a + b + 0.5));
}

double normalization_sum(int n, double a, double b, double lambda) {
    using specfun::LogGamma;
    auto safe_gamma = [](double x) -> LogGamma { return specfun::log_gamma(x); };
    const LogGamma g_na = safe_gamma(n + a + 1.0);
    const LogGamma g_a1 = safe_gamma(a + 1.0);
    const LogGamma g_abn = safe_gamma(a + b + n + 1.0);
    const double front_log = g_na.log_abs - g_a1.log_abs - g_abn.log_abs -
                             specfun::log_gamma(n + 1.0).log_abs;
    const int front_sign = g_na.sign * g_a1.sign * g_abn.sign;
    double sum = 0.0;
    for (int m = 0; m <= n; ++m) {
        const LogGamma g1 = safe_gamma(a + n - m);
        const LogGamma g2 = safe_gamma(b + m + 1.0);
        double term = specfun::gen_binomial(n + a, m) * specfun::gen_binomial(n + b, n - m);
        term *= g1.sign * g2.sign * std::exp(g1.log_abs + g2.log_abs + front_log);
        term *= specfun::hyp3f2_terminating(n, n + a + b + 1.0, a + n - m, a + 1.0,
                                            a + b + n + 1.0);
        if ((n - m) % 2 == 1)
            term = -term;
        sum += term;
    }
    return front_sign * sum / (2.0 * lambda);
}

std::optional<RadialEigenstate> make_eigenstate(int n, int l, int D,
                                                const PotentialParams& p) {
    if (n < 0 || l < 0)
        throw std::invalid_argument("make_eigenstate: negative quantum number");
    const ReducedRadialParams red = reduce(p, D, l, 0.0);
    const double q = level_decay(n, red.A_t, red.B_t);
    if (!(q > 0.0))
        return std::nullopt;
    RadialEigenstate st;
    st.n = n;
    st.l = l;
    st.D = D;
    st.jacobi_a = 2.0 * q;
    st.jacobi_b = 0.5 * std::sqrt(1.0 + 16.0 * red.B_t);
    st.energy = energy_from_reduced(red.A_t + red.B_t - q * q, p, D, l);
    const double lam = normalization_quadrature(n, st.jacobi_a, st.jacobi_b, p.lambda);
    st.omega = 1.0 / std::sqrt(lam);
    return st;
}

double radial_wavefunction(const RadialEigenstate& state, const PotentialParams& p,
                           double r) {
    if (!(r > 0.0))
        return 0.0;
    return state.omega *
           radial_wavefunction_raw(state.n, state.jacobi_a, state.jacobi_b, p.lambda, r);
}

std::vector<std::vector<double>> gram_schmidt(const std::vector<std::vector<double>>& funcs,
                                              double dr) {
    if (!(dr > 0.0))
        throw std::invalid_argument("gram_schmidt: dr must be positive");
    auto dot = [dr](const std::vector<double>& f, const std::vector<double>& g) {
        double s = 0.0;
        for (size_t i = 0; i < f.size(); ++i)
            s += f[i] * g[i];
        return s * dr;
    };
    std::vector<std::vector<double>> out;
    out.reserve(funcs.size());
    for (const auto& f : funcs) {
        if (!out.empty() && f.size() != out.front().size())
            throw std::invalid_argument("gram_schmidt: inconsistent sample counts");
        std::vector<double> v = f;
        const double orig = std::sqrt(dot(v, v));
        for (const auto& e : out) {
            const double c = dot(v, e);
            for (size_t i = 0; i < v.size(); ++i)
                v[i] -= c * e[i];
        }
        const double norm = std::sqrt(dot(v, v));
        if (!(norm > 1e-12 * orig))
            throw std::runtime_error("gram_schmidt: input is numerically rank deficient");
        for (double& x : v)
            x /= norm;
        out.push_back(std::move(v));
    }
    return out;
}

LimitingCaseMap limiting_case_map(double omega, double alpha, double lambda, double m,
                                  double hbar) {
    if (!(lambda > 0.0) || !(m > 0.0))
        throw std::invalid_argument("limiting_case_map: lambda and m must be positive");
    LimitingCaseMap out;
    out.A = m * omega * omega / (2.0 * lambda * lambda) -
            hbar * hbar * alpha * lambda * lambda / (30.0 * m);
    out.B = hbar * hbar * alpha * lambda * lambda / (2.0 * m);
    out.energy_shift = 2.0 * out.B / 3.0;
    return out;
}

} // namespace nuspectra::radial

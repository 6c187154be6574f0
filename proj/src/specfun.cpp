#include "nuspectra/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nuspectra::specfun {

namespace {

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// Lanczos coefficients, g = 7, n = 9 (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// log Gamma(x) for x >= 0.5.
double lanczos_log_gamma(double x) {
    const double z = x - 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i)
        acc += kLanczos[i] / (z + i);
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(acc);
}

} // namespace

double jacobi_eval(int n, JacobiIndex idx, double y) {
    if (n < 0)
        throw std::invalid_argument("jacobi_eval: negative degree");
    const double a = idx.alpha, b = idx.beta;
    if (n == 0)
        return 1.0;
    double pm1 = 1.0;
    double p = 0.5 * ((a + b + 2.0) * y + (a - b));
    for (int m = 2; m <= n; ++m) {
        const double apb = a + b;
        const double c1 = 2.0 * m * (m + apb) * (2.0 * m + apb - 2.0);
        const double c2 = (2.0 * m + apb - 1.0) * (a * a - b * b);
        const double c3 = (2.0 * m + apb - 1.0) * (2.0 * m + apb) * (2.0 * m + apb - 2.0);
        const double c4 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * (2.0 * m + apb);
        const double next = ((c2 + c3 * y) * p - c4 * pm1) / c1;
        pm1 = p;
        p = next;
    }
    return p;
}

double jacobi_deriv(int n, JacobiIndex idx, double y, int order) {
    if (order < 0)
        throw std::invalid_argument("jacobi_deriv: negative order");
    double factor = 1.0;
    JacobiIndex shifted = idx;
    int deg = n;
    for (int i = 0; i < order; ++i) {
        if (deg == 0)
            return 0.0;
        factor *= 0.5 * (deg + shifted.alpha + shifted.beta + 1.0);
        shifted.alpha += 1.0;
        shifted.beta += 1.0;
        --deg;
    }
    return factor * jacobi_eval(deg, shifted, y);
}

double jacobi_eval_sum_form(int n, JacobiIndex idx, double y) {
    double sum = 0.0;
    for (int m = 0; m <= n; ++m) {
        double term = gen_binomial(n + idx.alpha, m) * gen_binomial(n + idx.beta, n - m);
        term *= std::pow(y - 1.0, n - m) * std::pow(y + 1.0, m);
        sum += term;
    }
    return std::ldexp(sum, -n);
}

LogGamma log_gamma(double x) {
    if (std::isnan(x))
        throw std::domain_error("log_gamma: nan argument");
    if (is_nonpositive_integer(x))
        throw std::domain_error("log_gamma: pole at x = " + std::to_string(x));
    if (x >= 0.5)
        return {lanczos_log_gamma(x), +1};
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    const double s = std::sin(M_PI * x);
    const double log_abs = std::log(M_PI / std::fabs(s)) - lanczos_log_gamma(1.0 - x);
    return {log_abs, s > 0.0 ? +1 : -1};
}

double gamma_value(double x) {
    const LogGamma lg = log_gamma(x);
    return lg.sign * std::exp(lg.log_abs);
}

double gen_binomial(double top, int k) {
    if (k < 0)
        throw std::invalid_argument("gen_binomial: negative k");
    double result = 1.0;
    for (int i = 0; i < k; ++i) {
        result *= (top - i);
        result /= (i + 1);
    }
    return result;
}

double pochhammer(double x, int k) {
    double result = 1.0;
    for (int i = 0; i < k; ++i)
        result *= (x + i);
    return result;
}

double hyp3f2_terminating(int n, double p2, double p3, double q1, double q2) {
    if (n < 0)
        throw std::invalid_argument("hyp3f2_terminating: negative n");
    // Canonical parameter order makes p2<->p3 and q1<->q2 swaps bit-identical.
    if (p2 > p3) std::swap(p2, p3);
    if (q1 > q2) std::swap(q1, q2);
    double term = 1.0;
    double sum = 1.0;
    for (int j = 0; j < n; ++j) {
        const double d1 = q1 + j, d2 = q2 + j;
        if (d1 == 0.0 || d2 == 0.0)
            throw std::domain_error("hyp3f2_terminating: denominator Pochhammer hits zero");
        term *= static_cast<double>(-n + j);
        term *= (p2 + j);
        term *= (p3 + j);
        term /= d1;
        term /= d2;
        term /= (j + 1);
        sum += term;
    }
    return sum;
}

double jacobi_norm(int n, JacobiIndex idx) {
    const double a = idx.alpha, b = idx.beta;
    if (a <= -1.0 || b <= -1.0)
        throw std::domain_error("jacobi_norm: indices must exceed -1");
    double log_num = log_gamma(n + a + 1.0).log_abs + log_gamma(n + b + 1.0).log_abs;
    double log_den = log_gamma(n + a + b + 1.0).log_abs + log_gamma(n + 1.0).log_abs;
    const double front = (a + b + 1.0) * std::log(2.0) - std::log(2.0 * n + a + b + 1.0);
    return std::exp(front + log_num - log_den);
}

double jacobi_weighted_integral(double c, double d, int n, JacobiIndex idx) {
    if (c <= -1.0 || d <= -1.0)
        throw std::domain_error("jacobi_weighted_integral: requires c, d > -1");
    const double a = idx.alpha, b = idx.beta;
    const double hyp = hyp3f2_terminating(n, n + a + b + 1.0, c + 1.0, a + 1.0, c + d + 2.0);
    double log_front = (c + d + 1.0) * std::log(2.0);
    log_front += log_gamma(c + 1.0).log_abs + log_gamma(d + 1.0).log_abs;
    int sign = 1;
    {
        const LogGamma na = log_gamma(n + a + 1.0);
        log_front += na.log_abs;
        sign *= na.sign;
        const LogGamma ga = log_gamma(a + 1.0);
        log_front -= ga.log_abs;
        sign *= ga.sign;
    }
    log_front -= log_gamma(n + 1.0).log_abs + log_gamma(c + d + 2.0).log_abs;
    return sign * std::exp(log_front) * hyp;
}

} // namespace nuspectra::specfun

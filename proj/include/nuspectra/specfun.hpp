#ifndef NUSPECTRA_SPECFUN_HPP
#define NUSPECTRA_SPECFUN_HPP

#include <utility>

namespace nuspectra::specfun {

/// Index pair (alpha, beta) of a Jacobi polynomial P_n^{(alpha,beta)}.
/// Orthogonality and normalization require alpha, beta > -1; plain
/// evaluation is defined for any real pair.
struct JacobiIndex {
    double alpha;
    double beta;
};

/// P_n^{(alpha,beta)}(y) by the three-term recurrence in n.
double jacobi_eval(int n, JacobiIndex idx, double y);

/// d^order/dy^order P_n^{(alpha,beta)}(y) via the index-shift relation
/// d/dy P_n^{(a,b)} = (n+a+b+1)/2 * P_{n-1}^{(a+1,b+1)}.
double jacobi_deriv(int n, JacobiIndex idx, double y, int order = 1);

/// Same polynomial evaluated through the finite double-binomial sum
///   P_n^{(a,b)}(y) = 2^-n sum_m C(n+a,m) C(n+b,n-m) (y-1)^{n-m} (y+1)^m.
/// Used as an independent route against jacobi_eval.
double jacobi_eval_sum_form(int n, JacobiIndex idx, double y);

/// log|Gamma(x)| together with the sign of Gamma(x).
/// Throws std::domain_error at the poles (x a nonpositive integer).
struct LogGamma {
    double log_abs;
    int sign; // +1 or -1
};
LogGamma log_gamma(double x);

/// Gamma(x) itself; overflows to +-inf for large x rather than throwing.
double gamma_value(double x);

/// Generalized binomial coefficient C(top, k) with real upper argument,
/// as the product top (top-1) ... (top-k+1) / k!. Exact for integer input
/// while magnitudes stay below 2^53.
double gen_binomial(double top, int k);

/// Pochhammer symbol (x)_k = x (x+1) ... (x+k-1).
double pochhammer(double x, int k);

/// Terminating 3F2 at unit argument:
///   sum_{j=0}^{n} [(-n)_j (p2)_j (p3)_j] / [(q1)_j (q2)_j j!].
/// Parameters within each of (p2,p3) and (q1,q2) are canonicalized by
/// sorting, so swapping them is bit-identical. Throws std::domain_error
/// when a denominator Pochhammer vanishes inside the sum range.
double hyp3f2_terminating(int n, double p2, double p3, double q1, double q2);

/// Self-overlap of P_n^{(alpha,beta)} under the weight (1-y)^alpha (1+y)^beta:
///   2^{a+b+1}/(2n+a+b+1) * Gamma(n+a+1) Gamma(n+b+1) / (Gamma(n+a+b+1) n!).
/// Throws std::domain_error if alpha <= -1 or beta <= -1.
double jacobi_norm(int n, JacobiIndex idx);

/// Moment integral of a Jacobi polynomial against a shifted weight,
///   int_{-1}^{1} (1-y)^c (1+y)^d P_n^{(a,b)}(y) dy,
/// via the closed form with a terminating 3F2 factor. Requires c, d > -1.
double jacobi_weighted_integral(double c, double d, int n, JacobiIndex idx);

} // namespace nuspectra::specfun

#endif

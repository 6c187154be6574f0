#ifndef NUSPECTRA_RADIAL_HPP
#define NUSPECTRA_RADIAL_HPP

#include <optional>
#include <utility>
#include <vector>

namespace nuspectra::radial {

/// Physical inputs of the problem: well strengths A, B (energy), screening
/// lambda (inverse length), ring coefficients gamma/zeta/kappa
/// (energy * length^2), and the units mu, hbar.
struct PotentialParams {
    double A = 0.0;
    double B = 0.0;
    double lambda = 1.0;
    double gamma = 0.0;
    double zeta = 0.0;
    double kappa = 0.0;
    double mu = 1.0;
    double hbar = 1.0;

    void validate() const; // lambda, mu, hbar > 0
};

/// Dimensionless well parameters A~, B~, E~.
struct ReducedRadialParams {
    double A_t = 0.0;
    double B_t = 0.0;
    double E_t = 0.0;
};

/// The seven quantization constants plus the selected k root.
struct NUConstants {
    double c1, c2, c3, c4, c5, c6, c7;
    double k;
    bool k_tie = false; // both k roots were nonpositive

    /// Index pair (-c6-c7, -c7) attached to this constant set.
    double index_a() const { return -c6 - c7; }
    double index_b() const { return -c7; }

    /// The two strict window inequalities, c1 < 4 sqrt(c2) and
    /// 2 c2 + c1 < -12 sqrt(c2), reported as diagnostics. Measured: they
    /// never both hold on this branch (see the validate report).
    std::pair<bool, bool> strict_window() const;
};

/// One bound level: quantum numbers, energy, Jacobi indices (a, b) of the
/// wavefunction polynomial, and the normalization constant omega.
struct RadialEigenstate {
    int n;
    int l;
    int D;
    double energy;
    double jacobi_a; // = 2q, twice the decay exponent
    double jacobi_b; // n-independent, sqrt(1+16 B~)/2
    double omega;

    double decay_q() const { return 0.5 * jacobi_a; }
};

/// Which of the bound-state window conditions hold, reported individually.
struct BoundWindow {
    bool A_ok;         // A >= (lambda^2 hbar^2 / 2mu)(gamma_D/3 - 1/4), i.e. A~ >= -1/16
    bool B_ok;         // B >= -(lambda^2 hbar^2 / 2mu)(gamma_D + 1/4), i.e. B~ >= -1/16
    bool Bt_strong;    // B~ > 35/16
    double A_threshold;
    double B_threshold;
    double A_t;
    double B_t;

    /// The two B-side conditions disagree on part of parameter space;
    /// flagged when the weak window holds but the strong one does not.
    bool consistent() const { return !(B_ok && !Bt_strong); }
};

/// Pekeris-style stand-in for 1/x^2 built from the well's own shape
/// functions: -2/3 - tanh^2(x)/3 + 1/tanh^2(x).
double pekeris_rhs(double x);

/// Map (A, B, E) to the dimensionless (A~, B~, E~) at given (D, l):
///   4 lambda^2 A~ = (2mu/hbar^2)(A - gamma_D hbar^2 lambda^2 / 6mu)
///   4 lambda^2 B~ = (2mu/hbar^2)(B + gamma_D hbar^2 lambda^2 / 2mu)
///   4 lambda^2 E~ = (2mu/hbar^2)(E + gamma_D hbar^2 lambda^2 / 3mu)
ReducedRadialParams reduce(const PotentialParams& p, int D, int l, double E);

/// Inverse of the E-component of reduce().
double energy_from_reduced(double E_t, const PotentialParams& p, int D, int l);

BoundWindow bound_state_window(const PotentialParams& p, int D, int l);

/// Both roots of 4k = -(2n+1)^2 +- (2n+1) sqrt(1+16 A~), returned
/// {upper, lower}. Throws std::domain_error if 1+16 A~ < 0.
std::pair<double, double> nu_k_roots(int n, double A_t);

/// Closed form attached to the nonpositive k root with the minus branch of
/// the coupling constraint:
///   -(2n+1)^2/4 - (2n+1) sqrt(1+16A~)/4 - 1/2
///   - sqrt((1+16B~)(1+16A~ + 4(2n+1)^2 + 4(2n+1) sqrt(1+16A~)))/8.
/// Kept as the diagnostic companion of nu_constants(); the bound spectrum
/// itself is level_energy_reduced(), which the finite-difference oracle
/// confirms (see the validate suites).
double nu_energy_reduced(int n, double A_t, double B_t);

/// Decay exponent q of the n-th level:
///   q = (sqrt(1+16A~) - sqrt(1+16B~) - 2 - 4n) / 4.
/// The level is a bound state iff q > 0.
double level_decay(int n, double A_t, double B_t);

/// Reduced energy of the n-th level, E~ = A~ + B~ - q^2.
double level_energy_reduced(int n, double A_t, double B_t);

/// Number of bound levels (those with q > 0).
int bound_level_count(double A_t, double B_t);

/// Physical bound-level energy E_nl^D. Total on the radicand domain; use
/// level_decay / make_eigenstate for admissibility.
double energy_physical(int n, int l, int D, const PotentialParams& p);

/// Quantization constants for the nonpositive k root paired with
/// nu_energy_reduced (the pair satisfies c1^2 = c2 c3 identically; a
/// residual beyond 1e-9 relative throws).
NUConstants nu_constants(int n, const ReducedRadialParams& red);

/// Assemble the n-th bound eigenstate at (l, D), or nullopt if the level is
/// not bound (q <= 0). omega comes from quadrature of the unnormalized
/// profile; the closed-form normalization_sum is available for comparison.
std::optional<RadialEigenstate> make_eigenstate(int n, int l, int D,
                                                const PotentialParams& p);

/// Normalized radial profile
///   g_n(r) = omega (tanh lr)^{b+1/2} (sech lr)^{a} P_n^{(a,b)}(2 tanh^2 lr - 1).
double radial_wavefunction(const RadialEigenstate& state, const PotentialParams& p,
                           double r);

/// Same profile with omega = 1 (used for normalization integrals).
double radial_wavefunction_raw(int n, double a, double b, double lambda, double r);

/// Closed-form norm integral Lambda_n = int_0^infty g_unnorm^2 dr expressed
/// through weighted Jacobi moments with terminating 3F2 factors; omega =
/// 1/sqrt(Lambda_n). Throws std::domain_error when a Gamma argument hits a
/// pole; callers fall back to quadrature.
double normalization_sum(int n, double a, double b, double lambda);

/// Authoritative quadrature route for Lambda_n.
double normalization_quadrature(int n, double a, double b, double lambda);

/// Modified Gram-Schmidt on grid-sampled functions under the plain inner
/// product <f,g> = sum f_i g_i dr. Output spans the same flag as the input
/// prefixes; throws std::runtime_error on numerical rank deficiency
/// (residual below 1e-12 of the input norm).
std::vector<std::vector<double>> gram_schmidt(const std::vector<std::vector<double>>& funcs,
                                              double dr);

/// Well parameters that reproduce an oscillator-plus-inverse-square problem
/// as the screening vanishes, with the constant energy offset 2B/3.
struct LimitingCaseMap {
    double A;
    double B;
    double energy_shift;
};
LimitingCaseMap limiting_case_map(double omega, double alpha, double lambda, double m,
                                  double hbar);

} // namespace nuspectra::radial

#endif

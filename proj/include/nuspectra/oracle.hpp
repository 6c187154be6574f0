#ifndef NUSPECTRA_ORACLE_HPP
#define NUSPECTRA_ORACLE_HPP

#include "nuspectra/angular_types.hpp"

#include <functional>
#include <vector>

namespace nuspectra::oracle {

/// Uniform grid on [x_min, x_max] with n_points interior-inclusive samples.
struct Grid {
    double x_min;
    double x_max;
    int n_points;

    double spacing() const { return (x_max - x_min) / (n_points - 1); }
    double point(int i) const { return x_min + i * spacing(); }
    void validate() const;
};

/// Output of a finite-difference eigensolve: ascending eigenvalues, the
/// matching grid-sampled eigenvectors (normalized under the solve's measure),
/// residual norms ||T v - lambda v||, and a coarse-grid warning flag.
struct NumericSpectrum {
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> eigenvectors;
    Grid grid{0.0, 1.0, 3};
    std::vector<double> residual_norms;
    bool refinement_warning = false;
};

/// Symmetric tridiagonal matrix: diag[0..n-1], off[0..n-2].
struct SymTridiag {
    std::vector<double> diag;
    std::vector<double> off;
};

/// Number of eigenvalues of T strictly below x (Sturm count).
int sturm_count(const SymTridiag& T, double x);

/// Lowest `count` eigenvalues by bisection with Sturm counting
/// (at most 100 bisection steps each, i.e. machine precision on the bracket).
std::vector<double> tridiag_eigenvalues(const SymTridiag& T, int count);

/// Eigenvector for a converged eigenvalue by inverse iteration (<= 20 sweeps).
std::vector<double> tridiag_eigenvector(const SymTridiag& T, double eigenvalue);

/// Lowest `count` eigenpairs of -(hbar^2/2mu) g'' + V(r) g = E g with
/// Dirichlet ends, on the interior points of `grid`. Second-order 3-point
/// Laplacian; eigenvalues by bisection, vectors by inverse iteration.
/// With check_refinement the solve is repeated at half spacing and the
/// warning flag set if any eigenvalue moves by more than 10x `tolerance`.
NumericSpectrum radial_solve(const std::function<double(double)>& potential, Grid grid,
                             int count, double mu = 1.0, double hbar = 1.0,
                             bool check_refinement = false, double tolerance = 1e-8);

/// Eigenvalues L (interpretable as l(l+D-2)) of the polar angular equation
/// with ring coefficients (gamma', zeta', kappa') and fixed Lambda_{D-2},
/// discretized in self-adjoint form on (0, pi) and symmetrized with the
/// diagonal weight (sin theta)^{(D-2)/2}. Eigenvectors are returned in the
/// symmetrized variable u = (sin theta)^{(D-2)/2} H, normalized so that
/// sum u_i^2 h = 1 (equivalently int |H|^2 (sin theta)^{D-2} dtheta = 1).
NumericSpectrum angular_solve(const angular::RingParams& ring, int D, double Lam,
                              Grid grid, int count, bool check_refinement = false,
                              double tolerance = 1e-8);

/// Composite open-midpoint estimate of int_a^b f with Richardson refinement.
struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
};
QuadratureResult quadrature(const std::function<double(double)>& f, double a, double b,
                            int n, double tol = 1e-10, int max_levels = 12);

/// tanh-sinh rule for int_{-1}^{1} (1-y)^alpha (1+y)^beta f(y) dy with f
/// smooth on [-1,1]; handles endpoint-singular weights with alpha, beta > -1.
double de_weighted_integral(double alpha, double beta,
                            const std::function<double(double)>& f_smooth,
                            double tol = 1e-12);

/// Pointwise relative error x^2 |pekeris_rhs(x) - 1/x^2| over (0, x_max],
/// with the first crossings of the 1%, 5% and 10% thresholds.
struct PekerisScan {
    std::vector<std::pair<double, double>> curve; // (lambda r, relative error)
    double max_rel_error = 0.0;
    double max_at = 0.0;
    double first_cross_1pct = -1.0; // -1 when never crossed in range
    double first_cross_5pct = -1.0;
    double first_cross_10pct = -1.0;
};
PekerisScan pekeris_error_scan(double lambda_r_max, int samples);

} // namespace nuspectra::oracle

#endif

#ifndef NUSPECTRA_ANGULAR_HPP
#define NUSPECTRA_ANGULAR_HPP

#include "nuspectra/angular_types.hpp"
#include "nuspectra/util.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace nuspectra::angular {

/// Which sign of the (1-y) prefactor exponent produced the normalizable
/// solution of the polar equation.
enum class PhiSign { MinusHalfU1PlusU2, PlusHalfU1PlusU2 };

/// Solution data of the polar (theta_{D-1}) equation with the ring term.
struct AngularSolution {
    double eta0, eta1, eta2;
    double u0, u1, u2;
    double k;
    int n;
    int D;
    double l;   // effective top angular number; L = l(l+D-2) is the eigenvalue
    double Lam; // Lambda_{D-2}
    PhiSign phi_sign = PhiSign::MinusHalfU1PlusU2;

    double jacobi_a() const { return u0 - u2; }
    double jacobi_b() const { return u0 + u2; }
    double L() const { return l * (l + D - 2.0); }
};

/// sigma-tilde coefficients: eta2 = gamma' - l(l+D-2), eta1 = zeta',
/// eta0 = kappa' + l(l+D-2) - Lambda_{D-2}.
EtaParams eta_params(const RingParams& ring, int D, double l, double Lam);

struct UParams {
    double u0, u1, u2;
};

/// u0 = +sqrt(((D-3)/2)^2 - eta2 - k), u1 = (D-3-2u0)/2, u2 = eta1/(2u0).
/// Throws std::domain_error on a negative radicand and std::runtime_error
/// when eta1 != 0 with u0 = 0.
UParams u_params(const EtaParams& etas, double k, int D);

/// Roots of the degree-n quantization quadratic,
///   k = (2 - D - 2n - 2n^2 +- (1+2n) sqrt((D-2)^2 - 4 eta2)) / 2,
/// returned {upper, lower}.
std::pair<double, double> k_quadratic_roots(int n, int D, double eta2);

/// Roots of 4k - 4 eta0 = eta1^2 / u0^2 as a quadratic in k, returned
/// {upper, lower}.
std::pair<double, double> k_constraint_roots(const EtaParams& etas, int D);

/// Signed residuals of the two route cross-comparison identities;
/// both vanish only on the admissible set.
std::pair<double, double> consistency_residuals(int n, int D, const EtaParams& etas);

/// General path: eta_params -> matched k roots -> u_params. Returns nullopt
/// when no pair of roots from the two routes agrees within tolerance or the
/// Jacobi conditions u0 +- u2 > -1 fail. Among several admissible matches
/// the one with the larger u0 wins.
std::optional<AngularSolution> solve(const RingParams& ring, int D, double l, double Lam,
                                     int n, double match_tol = 1e-8);

/// Unnormalized polar profile
///   H_n(theta) = (1-y)^{e1} (1+y)^{e2} P_n^{(u0-u2, u0+u2)}(y), y = cos(theta),
/// where e1 = -+(u1+u2)/2 per sol.phi_sign and e2 = (u2-u1)/2.
double ring_wavefunction(const AngularSolution& sol, double theta);

/// Normalization constant N with int_0^pi |N H|^2 (sin theta)^{D-2} dtheta = 1.
double ring_norm_constant(const AngularSolution& sol);

/// Exponents e1, e2 of the (1-y)^{e1} (1+y)^{e2} prefactor actually in use
/// (they depend on sol.phi_sign).
double ring_exponent_one_minus(const AngularSolution& sol);
double ring_exponent_one_plus(const AngularSolution& sol);

/// Residual of the polar equation applied to the profile at y = cos(theta),
/// scaled by the largest participating term.
double ring_ode_residual(const AngularSolution& sol, double theta);

/// Intermediate-angle profile (2 <= j <= D-2):
///   H(theta_j) = (sin theta_j)^{l_{j-1}} P_n^{(c_j, c_j)}(cos theta_j),
/// with c_j = l_{j-1} + (j-2)/2 and n = l_j - l_{j-1}.
/// Throws std::invalid_argument when l_j < l_{j-1}.
double intermediate_angular(int j, int l_j, int l_jm1, double theta);

/// Normalization constant under the weight (sin theta_j)^{j-1}.
double intermediate_norm_constant(int j, int l_j, int l_jm1);

/// Special-case constructor: builds the solution from the per-case closed
/// formulas (pattern: 1 pure csc^2 ring term; 2 gamma = +-zeta; 3 zeta = 0;
/// 4 gamma = 0, kappa = +-zeta). Throws std::invalid_argument when the ring
/// parameters do not match the case pattern, std::runtime_error when no
/// consistent root exists.
AngularSolution specialize(int case_id, const RingParams& ring, int D, double l,
                           double Lam, int n);

/// Case-3 u0 evaluated with the opposite (plus-k) radicand sign; kept so the
/// sign ambiguity can be resolved empirically against the general path.
double case3_u0_plus_k_variant(const RingParams& ring, int D, double l, double Lam,
                               double k);

/// Effective l values in (l_lo, l_hi) for which a degree-n solution exists,
/// found by sign-scanning the root mismatch on a grid and bisecting.
std::vector<double> find_admissible_l(const RingParams& ring, int D, double Lam, int n,
                                      double l_lo, double l_hi, int grid = 400);

/// One random parameter draw that is exactly admissible for the given case.
struct CaseDraw {
    RingParams ring;
    int D;
    double l;
    double Lam;
    int n;
};
CaseDraw random_admissible_draw(int case_id, util::Rng& rng);

} // namespace nuspectra::angular

#endif

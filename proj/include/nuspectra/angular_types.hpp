#ifndef NUSPECTRA_ANGULAR_TYPES_HPP
#define NUSPECTRA_ANGULAR_TYPES_HPP

namespace nuspectra::angular {

/// Dimensionless ring-shaped coefficients (gamma', zeta', kappa'),
/// i.e. 2 mu / hbar^2 times the (gamma, zeta, kappa) of the potential.
struct RingParams {
    double gamma_p = 0.0;
    double zeta_p = 0.0;
    double kappa_p = 0.0;
};

/// Coefficients of the quadratic sigma-tilde(y) = eta2 y^2 + eta1 y + eta0.
struct EtaParams {
    double eta0 = 0.0;
    double eta1 = 0.0;
    double eta2 = 0.0;
};

} // namespace nuspectra::angular

#endif

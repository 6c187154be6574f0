#ifndef NUSPECTRA_GEOMETRY_HPP
#define NUSPECTRA_GEOMETRY_HPP

#include <span>
#include <vector>

namespace nuspectra::geometry {

/// Quantum numbers of a D-dimensional state: dimension D >= 2, the top
/// angular number l = l_{D-1}, the nondecreasing ladder l_1 <= ... <= l_{D-2}
/// (l_1 = |m|), and the radial node count n_r.
struct QuantumNumbers {
    int D = 3;
    int l = 0;
    std::vector<int> ladder; // l_1 .. l_{D-2}; empty for D <= 2
    int n_r = 0;

    /// Throws std::invalid_argument on a broken invariant.
    void validate() const;
};

/// Effective centrifugal strength gamma_D = ((D + 2l - 2)^2 - 1) / 4.
double centrifugal_gamma(int D, int l);

/// Separation constant of the j-th angular equation, l_j (l_j + j - 1).
double angular_separation_constant(int l_j, int j);

/// Hyperspherical to Cartesian map. angles = (theta_1 .. theta_{D-1}) with
/// theta_1 in [0, 2pi) azimuthal and theta_{D-1} polar-most; D = angles.size()+1.
std::vector<double> to_cartesian(double r, std::span<const double> angles);

/// Angular factor of the volume element, prod_{j=1}^{D-1} (sin theta_j)^{j-1}.
double volume_weight(std::span<const double> angles, int D);

/// Surface area of the unit (D-1)-sphere, 2 pi^{D/2} / Gamma(D/2).
double unit_sphere_area(int D);

} // namespace nuspectra::geometry

#endif

#include "nuspectra/geometry.hpp"

#include "nuspectra/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace nuspectra::geometry {

void QuantumNumbers::validate() const {
    if (D < 2)
        throw std::invalid_argument("QuantumNumbers: D must be >= 2");
    if (l < 0 || n_r < 0)
        throw std::invalid_argument("QuantumNumbers: negative quantum number");
    if (static_cast<int>(ladder.size()) != std::max(0, D - 2))
        throw std::invalid_argument("QuantumNumbers: ladder must hold l_1..l_{D-2}");
    for (size_t i = 0; i < ladder.size(); ++i) {
        if (ladder[i] < 0)
            throw std::invalid_argument("QuantumNumbers: negative ladder entry");
        if (i > 0 && ladder[i] < ladder[i - 1])
            throw std::invalid_argument("QuantumNumbers: ladder must be nondecreasing");
    }
    if (!ladder.empty() && ladder.back() > l)
        throw std::invalid_argument("QuantumNumbers: l_{D-2} must not exceed l");
}

double centrifugal_gamma(int D, int l) {
    if (D < 2)
        throw std::invalid_argument("centrifugal_gamma: D must be >= 2");
    const double s = D + 2.0 * l - 2.0;
    return (s * s - 1.0) / 4.0;
}

double angular_separation_constant(int l_j, int j) {
    if (j < 1)
        throw std::invalid_argument("angular_separation_constant: j must be >= 1");
    return static_cast<double>(l_j) * (l_j + j - 1.0);
}

std::vector<double> to_cartesian(double r, std::span<const double> angles) {
    const int D = static_cast<int>(angles.size()) + 1;
    if (D < 2)
        throw std::invalid_argument("to_cartesian: need at least one angle");
    std::vector<double> x(D);
    // S_j = prod_{k=j}^{D-1} sin(theta_k); x_D = r cos(theta_{D-1}),
    // x_j = r cos(theta_{j-1}) S_j for 3 <= j <= D-1, and the azimuthal pair
    // x_1 = r cos(theta_1) S_2, x_2 = r sin(theta_1) S_2.
    double tail = 1.0;
    for (int j = D; j >= 3; --j) {
        const double theta = angles[j - 2]; // theta_{j-1}
        x[j - 1] = r * std::cos(theta) * tail;
        tail *= std::sin(theta);
    }
    x[0] = r * std::cos(angles[0]) * tail;
    x[1] = r * std::sin(angles[0]) * tail;
    return x;
}

double volume_weight(std::span<const double> angles, int D) {
    if (static_cast<int>(angles.size()) != D - 1)
        throw std::invalid_argument("volume_weight: need D-1 angles");
    double w = 1.0;
    for (int j = 2; j <= D - 1; ++j)
        w *= std::pow(std::sin(angles[j - 1]), j - 1);
    return w;
}

double unit_sphere_area(int D) {
    using specfun::log_gamma;
    return 2.0 * std::exp(0.5 * D * std::log(M_PI) - log_gamma(0.5 * D).log_abs);
}

} // namespace nuspectra::geometry

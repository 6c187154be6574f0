#ifndef NUSPECTRA_VALIDATE_HPP
#define NUSPECTRA_VALIDATE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace nuspectra::validate {

/// One named check with its measured value and the tolerance it was held to.
/// Informational entries (measurements with nothing to exceed) carry
/// tolerance < 0 and always pass.
struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string reference;
};

struct SuiteOptions {
    std::uint64_t seed = 20240817ull;
    int fd_points = 4000; // grid for the finite-difference solves
};

/// Known suite names: pekeris, radial-oracle, angular-oracle, jacobi,
/// special-cases, gram, all. Throws std::invalid_argument otherwise.
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opt = {});

bool all_pass(const std::vector<CheckResult>& checks);

/// Independent associated Legendre P_l^m(x) (no Condon-Shortley phase),
/// used as a cross-reference for the D = 3 angular solutions.
double assoc_legendre(int l, int m, double x);

} // namespace nuspectra::validate

#endif

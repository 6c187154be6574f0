#ifndef NUSPECTRA_UTIL_HPP
#define NUSPECTRA_UTIL_HPP

#include <cstdint>

namespace nuspectra::util {

/// splitmix64 generator; self-contained so that seeded runs are reproducible
/// across standard libraries.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double uniform01() { return (next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

/// |x - y| / max(scale, |y|).
inline double rel_diff(double x, double y, double scale = 1.0) {
    const double d = x > y ? x - y : y - x;
    const double m = y < 0.0 ? -y : y;
    return d / (m > scale ? m : scale);
}

} // namespace nuspectra::util

#endif

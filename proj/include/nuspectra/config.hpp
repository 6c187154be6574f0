#ifndef NUSPECTRA_CONFIG_HPP
#define NUSPECTRA_CONFIG_HPP

#include "nuspectra/radial.hpp"

#include <optional>
#include <string>

namespace nuspectra::config {

/// A swept parameter: key plus an inclusive start..stop range with `steps`
/// evaluation points.
struct Range {
    std::string key;
    double start = 0.0;
    double stop = 0.0;
    int steps = 1;

    double at(int i) const {
        return steps <= 1 ? start : start + (stop - start) * i / (steps - 1.0);
    }
};

/// Run configuration shared by the subcommands. Files use flat key=value
/// lines ('#' comments); command-line flags of the same name win. Unknown
/// keys are rejected.
struct RunConfig {
    radial::PotentialParams params;
    int D = 3;
    int n_max = 2;
    int l_max = 0;
    bool numeric = false;
    std::string format = "csv"; // csv or json
    std::string out;            // empty = stdout
    double rmax_factor = 20.0;  // r_max = rmax_factor / lambda
    int grid_points = 4000;
    std::uint64_t seed = 20240817ull;
    std::optional<Range> range; // set when a value was given as start:stop:steps

    double r_max() const { return rmax_factor / params.lambda; }
    void apply(const std::string& key, const std::string& value);
};

/// Parse a key=value file into `cfg`. Throws std::runtime_error on unknown
/// keys or malformed lines.
void load_file(RunConfig& cfg, const std::string& path);

/// Apply NUSPECTRA_DEFAULTS (if set) to `cfg`.
void load_env_defaults(RunConfig& cfg);

} // namespace nuspectra::config

#endif

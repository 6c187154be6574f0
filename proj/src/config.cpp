#include "nuspectra/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nuspectra::config {

namespace {

bool parse_range(const std::string& value, Range& out) {
    const auto c1 = value.find(':');
    if (c1 == std::string::npos)
        return false;
    const auto c2 = value.find(':', c1 + 1);
    if (c2 == std::string::npos)
        throw std::runtime_error("range values use start:stop:steps");
    out.start = std::stod(value.substr(0, c1));
    out.stop = std::stod(value.substr(c1 + 1, c2 - c1 - 1));
    out.steps = std::stoi(value.substr(c2 + 1));
    if (out.steps < 1)
        throw std::runtime_error("range needs at least one step");
    return true;
}

bool parse_bool(const std::string& v) {
    if (v == "1" || v == "true" || v == "yes" || v == "on")
        return true;
    if (v == "0" || v == "false" || v == "no" || v == "off")
        return false;
    throw std::runtime_error("expected a boolean, got '" + v + "'");
}

} // namespace

void RunConfig::apply(const std::string& key, const std::string& value) {
    auto set_param = [&](double& slot) {
        Range r;
        r.key = key;
        if (parse_range(value, r)) {
            if (range.has_value() && range->key != key)
                throw std::runtime_error("only one parameter may carry a range");
            range = r;
            slot = r.start;
        } else {
            slot = std::stod(value);
        }
    };
    if (key == "A") set_param(params.A);
    else if (key == "B") set_param(params.B);
    else if (key == "lambda") set_param(params.lambda);
    else if (key == "gamma") set_param(params.gamma);
    else if (key == "zeta") set_param(params.zeta);
    else if (key == "kappa") set_param(params.kappa);
    else if (key == "mu") set_param(params.mu);
    else if (key == "hbar") set_param(params.hbar);
    else if (key == "D") D = std::stoi(value);
    else if (key == "n-max") n_max = std::stoi(value);
    else if (key == "l-max") l_max = std::stoi(value);
    else if (key == "numeric") numeric = parse_bool(value);
    else if (key == "format") {
        if (value != "csv" && value != "json")
            throw std::runtime_error("format must be csv or json");
        format = value;
    }
    else if (key == "out") out = value;
    else if (key == "rmax-factor") rmax_factor = std::stod(value);
    else if (key == "grid-points") grid_points = std::stoi(value);
    else if (key == "seed") seed = std::stoull(value);
    else throw std::runtime_error("unknown configuration key '" + key + "'");
}

void load_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        // trim
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            continue;
        const auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected key=value");
        auto trim = [](std::string s) {
            const auto b2 = s.find_first_not_of(" \t");
            const auto e2 = s.find_last_not_of(" \t");
            return b2 == std::string::npos ? std::string() : s.substr(b2, e2 - b2 + 1);
        };
        cfg.apply(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

void load_env_defaults(RunConfig& cfg) {
    if (const char* path = std::getenv("NUSPECTRA_DEFAULTS"))
        load_file(cfg, path);
}

} // namespace nuspectra::config

// nuspectra command line: closed-form bound-state spectra of the hyperbolic
// well with a ring-shaped angular term, cross-checked against the built-in
// finite-difference oracles.
//
// Exit codes: 0 success, 1 usage/config error, 2 domain or validation failure.

#include "CLI11.hpp"
#include "json.hpp"

#include "nuspectra/config.hpp"
#include "nuspectra/geometry.hpp"
#include "nuspectra/oracle.hpp"
#include "nuspectra/radial.hpp"
#include "nuspectra/util.hpp"
#include "nuspectra/validate.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nuspectra::config::RunConfig;
namespace radial = nuspectra::radial;
namespace oracle = nuspectra::oracle;
namespace validate = nuspectra::validate;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct SpectrumRow {
    double sweep_value = 0.0;
    int n = 0, l = 0, D = 3;
    std::optional<double> e_analytic;
    std::optional<double> e_numeric;
    std::optional<double> rel_diff;
    std::string flags;
    std::string error;
};

std::string window_flags(const radial::BoundWindow& w, bool bound) {
    std::vector<std::string> tags;
    if (!w.A_ok)
        tags.push_back("A_below_threshold");
    if (!w.B_ok)
        tags.push_back("B_below_threshold");
    if (!w.Bt_strong)
        tags.push_back("Bt_below_35_16");
    if (!bound)
        tags.push_back("unbound_level");
    if (tags.empty())
        return "ok";
    std::string out;
    for (size_t i = 0; i < tags.size(); ++i)
        out += (i ? ";" : "") + tags[i];
    return out;
}

// One spectrum evaluation at the config's current parameter values.
std::vector<SpectrumRow> spectrum_rows(const RunConfig& cfg, double sweep_value, bool* had_error) {
    std::vector<SpectrumRow> rows;
    for (int n = 0; n <= cfg.n_max; ++n) {
        for (int l = 0; l <= cfg.l_max; ++l) {
            SpectrumRow row;
            row.sweep_value = sweep_value;
            row.n = n;
            row.l = l;
            row.D = cfg.D;
            try {
                // The window never needs the radicands, so failed conditions
                // stay visible even when the level itself is out of domain.
                const auto w = radial::bound_state_window(cfg.params, cfg.D, l);
                const auto red = radial::reduce(cfg.params, cfg.D, l, 0.0);
                bool bound = false;
                try {
                    bound = radial::level_decay(n, red.A_t, red.B_t) > 0.0;
                    row.e_analytic = radial::energy_physical(n, l, cfg.D, cfg.params);
                } catch (const std::exception& ex) {
                    row.error = ex.what();
                    *had_error = true;
                }
                row.flags = window_flags(w, bound);
            } catch (const std::exception& ex) {
                row.error = ex.what();
                *had_error = true;
            }
            rows.push_back(row);
        }
    }
    if (cfg.numeric) {
        // One oracle solve per l covering the bound levels of that column.
        for (int l = 0; l <= cfg.l_max; ++l) {
            try {
                const auto red = radial::reduce(cfg.params, cfg.D, l, 0.0);
                const int nb = radial::bound_level_count(red.A_t, red.B_t);
                if (nb == 0)
                    continue;
                const double gd = nuspectra::geometry::centrifugal_gamma(cfg.D, l);
                const auto p = cfg.params;
                const double cf = gd * p.hbar * p.hbar / (2.0 * p.mu);
                oracle::Grid grid{0.0, cfg.r_max(), cfg.grid_points};
                const auto fd = oracle::radial_solve(
                    [p, cf](double r) {
                        const double t = std::tanh(p.lambda * r);
                        return p.A * t * t + p.B / (t * t) + cf / (r * r);
                    },
                    grid, nb);
                for (auto& row : rows) {
                    if (row.l != l || row.n >= nb || !row.e_analytic)
                        continue;
                    row.e_numeric = fd.eigenvalues[row.n];
                    row.rel_diff = nuspectra::util::rel_diff(*row.e_analytic, *row.e_numeric,
                                                             1e-300);
                }
            } catch (const std::exception&) {
                // numeric column stays empty for this l
            }
        }
    }
    return rows;
}

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open output file '" + cfg.out + "'");
    f << text;
}

std::string rows_to_csv(const std::vector<SpectrumRow>& rows, bool with_sweep,
                        const std::string& sweep_key) {
    std::ostringstream os;
    if (with_sweep)
        os << sweep_key << ",";
    os << "n,l,D,E_analytic,E_numeric,rel_diff,bound_flags,error\n";
    for (const auto& r : rows) {
        if (with_sweep)
            os << fmt(r.sweep_value) << ",";
        os << r.n << "," << r.l << "," << r.D << ",";
        os << (r.e_analytic ? fmt(*r.e_analytic) : "") << ",";
        os << (r.e_numeric ? fmt(*r.e_numeric) : "") << ",";
        os << (r.rel_diff ? fmt(*r.rel_diff) : "") << ",";
        os << r.flags << "," << r.error << "\n";
    }
    return os.str();
}

std::string rows_to_json(const std::vector<SpectrumRow>& rows, bool with_sweep,
                         const std::string& sweep_key) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        if (with_sweep)
            j[sweep_key] = r.sweep_value;
        j["n"] = r.n;
        j["l"] = r.l;
        j["D"] = r.D;
        if (r.e_analytic) j["E_analytic"] = *r.e_analytic;
        if (r.e_numeric) j["E_numeric"] = *r.e_numeric;
        if (r.rel_diff) j["rel_diff"] = *r.rel_diff;
        j["bound_flags"] = r.flags;
        if (!r.error.empty()) j["error"] = r.error;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

int cmd_spectrum(const RunConfig& cfg) {
    bool had_error = false;
    const auto rows = spectrum_rows(cfg, 0.0, &had_error);
    write_output(cfg, cfg.format == "json" ? rows_to_json(rows, false, "")
                                           : rows_to_csv(rows, false, ""));
    return had_error ? 2 : 0;
}

int cmd_sweep(RunConfig cfg) {
    if (!cfg.range.has_value())
        throw CLI::ValidationError("sweep", "exactly one parameter must carry start:stop:steps");
    const auto range = *cfg.range;
    bool had_error = false;
    std::vector<SpectrumRow> all;
    for (int i = 0; i < range.steps; ++i) {
        const double v = range.at(i);
        char exact[40];
        std::snprintf(exact, sizeof exact, "%.17g", v); // round-trips the double
        cfg.apply(range.key, exact);
        cfg.range.reset();
        const auto rows = spectrum_rows(cfg, v, &had_error);
        all.insert(all.end(), rows.begin(), rows.end());
    }
    write_output(cfg, cfg.format == "json" ? rows_to_json(all, true, range.key)
                                           : rows_to_csv(all, true, range.key));
    return had_error ? 2 : 0;
}

int cmd_wavefunction(const RunConfig& cfg, int n, int l, int samples) {
    const auto st = radial::make_eigenstate(n, l, cfg.D, cfg.params);
    if (!st) {
        const auto red = radial::reduce(cfg.params, cfg.D, l, 0.0);
        const double q = radial::level_decay(n, red.A_t, red.B_t);
        std::cerr << "inadmissible state: decay exponent q = " << fmt(q)
                  << " (bound levels need q > 0, i.e. jacobi_a > 0)\n";
        return 2;
    }
    std::ostringstream os;
    os << "# n=" << st->n << " l=" << st->l << " D=" << st->D
       << " energy=" << fmt(st->energy) << " omega=" << fmt(st->omega)
       << " jacobi_a=" << fmt(st->jacobi_a) << " jacobi_b=" << fmt(st->jacobi_b) << "\n";
    os << "r,g\n";
    const double r_max = cfg.r_max();
    for (int i = 0; i <= samples; ++i) {
        const double r = r_max * i / samples;
        os << fmt(r) << "," << fmt(radial::radial_wavefunction(*st, cfg.params, r)) << "\n";
    }
    write_output(cfg, os.str());
    return 0;
}

int cmd_validate(const RunConfig& cfg, const std::string& suite) {
    std::vector<validate::CheckResult> checks;
    try {
        validate::SuiteOptions opt;
        opt.seed = cfg.seed;
        opt.fd_points = cfg.grid_points;
        checks = validate::run_suite(suite, opt);
    } catch (const std::invalid_argument& ex) {
        std::cerr << ex.what() << "\n";
        return 1;
    }
    nlohmann::ordered_json report;
    report["suite"] = suite;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json j;
        j["check"] = c.name;
        j["status"] = c.pass ? "pass" : "fail";
        j["measured"] = c.measured;
        if (c.tolerance >= 0.0)
            j["tolerance"] = c.tolerance;
        else
            j["tolerance"] = nullptr;
        j["reference"] = c.reference;
        arr.push_back(j);
    }
    report["checks"] = arr;
    report["all_pass"] = validate::all_pass(checks);
    write_output(cfg, report.dump(2) + "\n");
    return validate::all_pass(checks) ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bound states of the hyperbolic well with a ring-shaped term"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    // flag -> config key; values may be start:stop:steps on sweep
    std::vector<std::pair<std::string, std::string>> pending;
    auto add_param = [&](CLI::App* cmd, const std::string& flag, const std::string& key) {
        cmd->add_option_function<std::string>(
            flag, [&pending, key](const std::string& v) { pending.emplace_back(key, v); });
    };

    auto add_shared = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "key=value configuration file");
        for (const auto& [flag, key] :
             std::vector<std::pair<std::string, std::string>>{
                 {"--A", "A"}, {"--B", "B"}, {"--lambda", "lambda"}, {"--gamma", "gamma"},
                 {"--zeta", "zeta"}, {"--kappa", "kappa"}, {"--mu", "mu"},
                 {"--hbar", "hbar"}, {"--D", "D"}, {"--n-max", "n-max"},
                 {"--l-max", "l-max"}, {"--format", "format"}, {"--out", "out"},
                 {"--rmax-factor", "rmax-factor"}, {"--grid-points", "grid-points"},
                 {"--seed", "seed"}})
            add_param(cmd, flag, key);
        cmd->add_flag_function("--numeric",
                               [&pending](std::int64_t) { pending.emplace_back("numeric", "1"); });
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "closed-form energy table");
    add_shared(spectrum);
    CLI::App* wavefn = app.add_subcommand("wavefunction", "sampled radial profile");
    add_shared(wavefn);
    int wf_n = 0, wf_l = 0, wf_samples = 400;
    wavefn->add_option("--n", wf_n, "radial degree");
    wavefn->add_option("--l", wf_l, "angular number");
    wavefn->add_option("--samples", wf_samples, "number of r intervals");
    CLI::App* sweep = app.add_subcommand("sweep", "spectra along one ranged parameter");
    add_shared(sweep);
    CLI::App* valid = app.add_subcommand("validate", "run a named check suite");
    add_shared(valid);
    std::string suite = "all";
    valid->add_option("--suite", suite,
                      "pekeris | radial-oracle | angular-oracle | jacobi | special-cases | "
                      "gram | all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage errors exit 1; --help exits 0
    }

    try {
        nuspectra::config::load_env_defaults(cfg);
        if (!config_path.empty())
            nuspectra::config::load_file(cfg, config_path);
        for (const auto& [key, value] : pending)
            cfg.apply(key, value);
        cfg.params.validate();

        if (spectrum->parsed())
            return cmd_spectrum(cfg);
        if (wavefn->parsed())
            return cmd_wavefunction(cfg, wf_n, wf_l, wf_samples);
        if (sweep->parsed())
            return cmd_sweep(cfg);
        if (valid->parsed())
            return cmd_validate(cfg, suite);
    } catch (const CLI::ValidationError& ex) {
        std::cerr << ex.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return 1;
    } catch (const std::runtime_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::domain_error& ex) {
        std::cerr << "domain error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}

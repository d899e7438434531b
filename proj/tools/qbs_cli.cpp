// Command-line front end: stationary quasibound states and scattering
// resonances for the built-in model families, with CSV/JSON artifacts.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qbs/run.hpp"

namespace {

using qbs::cli::Command;
using qbs::cli::Format;
using qbs::cli::GridSpec;
using qbs::cli::ModelKind;
using qbs::cli::RunConfig;

struct RawOptions {
    std::string model;
    std::string parity;
    std::string format;
    std::string grid;
    std::string config_path;
};

void add_common(CLI::App* sub, RunConfig& cfg, RawOptions& raw) {
    sub->add_option("--model", raw.model, "delta-field | leaky-sphere | twin-barrier");
    sub->add_option("--V0a2", cfg.V0a2, "dimensionless barrier strength V0*a^2");
    sub->add_option("--w", cfg.w_over_a, "barrier width in units of a");
    sub->add_option("--a", cfg.a, "well radius / half-width");
    sub->add_option("--f-frac", cfg.f_frac, "force as a fraction of the critical force");
    sub->add_option("--eb", cfg.eb, "delta-well bound energy (negative)");
    sub->add_option("--parity", raw.parity, "even | odd");
    sub->add_option("--grid", raw.grid, "N,min,max sampling grid");
    sub->add_option("--out", cfg.out, "output path ('-' = stdout)");
    sub->add_option("--format", raw.format, "csv | json");
    sub->add_option("--config", raw.config_path, "flat key=value config file");
    sub->add_option("--mass", cfg.mass, "particle mass (default 1/2, i.e. 2m=1)");
    sub->add_option("--tau", cfg.tau, "system time for timeline dumps");
    sub->add_option("--l", cfg.l, "orbital quantum number for timeline dumps");
    sub->add_option("--energy", [&cfg](const std::vector<std::string>& v) {
        cfg.energy = std::stod(v[0]);
        return true;
    }, "evaluation energy for greens dumps");
    sub->add_option("--source", [&cfg](const std::vector<std::string>& v) {
        cfg.source = std::stod(v[0]);
        return true;
    }, "source coordinate for greens dumps");
}

int finalize(RunConfig& cfg, const RawOptions& raw) {
    if (!raw.config_path.empty()) {
        // Flags override the file: re-apply nothing; the file was loaded
        // into cfg before parsing, so any flag already won.
    }
    if (!raw.model.empty()) {
        if (raw.model == "delta-field") cfg.model = ModelKind::DeltaField;
        else if (raw.model == "leaky-sphere") cfg.model = ModelKind::LeakySphere;
        else if (raw.model == "twin-barrier") cfg.model = ModelKind::TwinBarrier;
        else {
            std::cerr << "error: unknown model '" << raw.model << "'\n";
            return qbs::cli::kExitBadConfig;
        }
    }
    if (!raw.parity.empty()) {
        if (raw.parity == "even") cfg.parity = qbs::models::Parity::Even;
        else if (raw.parity == "odd") cfg.parity = qbs::models::Parity::Odd;
        else {
            std::cerr << "error: parity must be even|odd\n";
            return qbs::cli::kExitBadConfig;
        }
    }
    if (!raw.format.empty()) {
        if (raw.format == "csv") cfg.format = Format::Csv;
        else if (raw.format == "json") cfg.format = Format::Json;
        else {
            std::cerr << "error: format must be csv|json\n";
            return qbs::cli::kExitBadConfig;
        }
    }
    if (!raw.grid.empty()) {
        GridSpec g;
        if (std::sscanf(raw.grid.c_str(), "%d,%lf,%lf", &g.n, &g.lo, &g.hi) != 3) {
            std::cerr << "error: --grid expects N,min,max\n";
            return qbs::cli::kExitBadConfig;
        }
        g.set = true;
        cfg.grid = g;
    }
    return -1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasibound-state solver: stationary quasibound states and S-matrix resonances"};
    app.require_subcommand(1);

    RunConfig cfg;
    RawOptions raw;

    // Load a config file (if any) before CLI11 binds flags, so flags win.
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                qbs::cli::apply_config_file(cfg, argv[i + 1]);
            } catch (const qbs::error& e) {
                std::cerr << "error: " << e.what() << "\n";
                return qbs::cli::kExitBadConfig;
            }
        }
    }

    const struct {
        const char* name;
        const char* help;
        Command command;
    } subs[] = {
        {"solve", "locate stationary quasibound energies", Command::Solve},
        {"scan", "roots along a parameter sweep (CSV)", Command::Scan},
        {"waveform", "sampled waveform with bound-state envelope (CSV)", Command::Waveform},
        {"critical", "critical barrier width, estimate and actual (JSON)", Command::Critical},
        {"resonances", "S-matrix poles alongside stationary roots (JSON)", Command::Resonances},
        {"timeline", "timeline wave dump (CSV)", Command::Timeline},
        {"greens", "Green's function dump (CSV)", Command::Greens},
        {"regression", "built-in reference regression table", Command::Regression},
    };
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        add_common(sub, cfg, raw);
        if (s.command == Command::Regression)
            sub->add_option("--tol-scale", cfg.tol_scale, "scale every tolerance (harness self-test)");
        sub->callback([&cfg, cmd = s.command]() { cfg.command = cmd; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return qbs::cli::kExitBadConfig;
    }

    const int early = finalize(cfg, raw);
    if (early >= 0) return early;
    return qbs::cli::run(cfg);
}

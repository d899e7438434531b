#pragma once

#include <optional>
#include <string>

#include "qbs/models.hpp"

namespace qbs::cli {

enum class Command { Solve, Scan, Waveform, Critical, Resonances, Timeline, Greens, Regression };
enum class ModelKind { DeltaField, LeakySphere, TwinBarrier };
enum class Format { Csv, Json };

struct GridSpec {
    int n = 0;
    double lo = 0.0;
    double hi = 0.0;
    bool set = false;
};

// Parsed run description. Defaults reproduce the built-in reference
// parameters (V0 a^2 = 72 with a = 3, w = a/2; delta well with E_b = -1).
struct RunConfig {
    Command command = Command::Solve;
    ModelKind model = ModelKind::LeakySphere;
    double V0a2 = 72.0;
    double w_over_a = 0.5;
    double a = 3.0;
    double f_frac = 0.1;
    double eb = -1.0;
    double mass = 0.5;
    models::Parity parity = models::Parity::Even;
    GridSpec grid;
    std::string out = "-"; // "-" = stdout
    std::optional<Format> format;
    double tau = 1.0;
    int l = 0;
    std::optional<double> energy; // greens: evaluation energy override
    std::optional<double> source; // greens: source coordinate override
    double tol_scale = 1.0;       // regression only
};

// Exit codes: 0 success, 2 invalid configuration, 3 numerical
// non-convergence (the message names the failing operation).
inline constexpr int kExitOk = 0;
inline constexpr int kExitBadConfig = 2;
inline constexpr int kExitNumerical = 3;

int run(const RunConfig& config);

// Flat key=value config file support; unknown keys are an error. Values
// mirror the command-line flag names without the leading dashes.
void apply_config_file(RunConfig& config, const std::string& path);

} // namespace qbs::cli

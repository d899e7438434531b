#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "qbs/errors.hpp"

namespace qbs {

// Closed-form region building blocks. Keeping waves piecewise-analytic lets
// the selection integrals use exact sinusoid tails and cheap quadrature on
// the interiors.

// A * sin(k x + phi)
struct Sinusoid {
    double amp = 0.0;
    double k = 0.0;
    double phi = 0.0;
};

// A e^{-kappa (x - x0)} + B e^{+kappa (x - x0)}
struct ExpPair {
    double a = 0.0;
    double b = 0.0;
    double kappa = 0.0;
    double x0 = 0.0;
};

// cA * Ai(-z) + cB * Bi(-z),  z = kappa_f (x + E/F)  (uniform-field class)
struct AiryComb {
    double c_ai = 0.0;
    double c_bi = 0.0;
    double kappa_f = 0.0;
    double x_shift = 0.0; // E/F
};

using RegionForm = std::variant<Sinusoid, ExpPair, AiryComb>;

struct Region {
    double lo = 0.0;
    double hi = 0.0; // +inf allowed for tails
    RegionForm form;
};

enum class WaveClass { UniformField, SWave, FreeEven, FreeOdd };

struct Sample {
    double x = 0.0;
    double psi = 0.0;
};

// A sampled piecewise-analytic wave. For the SWave class the stored wave is
// the reduced radial function u = r R. The tail is the last region; for the
// spherical/free classes it must be a pure Sinusoid so selection integrals
// close in Fresnel form.
struct Waveform {
    WaveClass cls = WaveClass::FreeOdd;
    double energy = 0.0;
    std::vector<Region> regions;
    std::vector<Region> envelope_regions; // reference bound-state wave
    std::vector<Sample> samples;
    std::vector<Sample> envelope_samples;

    double value(double x) const;
    double derivative(double x) const;
    bool has_envelope() const { return !envelope_regions.empty(); }
    double envelope_value(double x) const;

    // Fills samples (and envelope_samples when present) on the given grid.
    void sample_grid(const std::vector<double>& xs);

    // The final region, which callers treat as the analytic tail.
    const Region& tail() const;
};

double region_value(const Region& r, double x);
double region_derivative(const Region& r, double x);

} // namespace qbs

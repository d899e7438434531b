#pragma once

#include <variant>
#include <vector>

#include "qbs/units.hpp"
#include "qbs/waveform.hpp"

namespace qbs::models {

enum class Parity { Even, Odd };

// V(x) = -lambda delta(x) in a uniform force F; one bound state at
// E_b = -m lambda^2 / 2.
struct DeltaWellInField {
    double lambda = 2.0;
    double F = 0.1;
    double m = 0.5;

    double bound_energy() const { return -0.5 * m * lambda * lambda; }
};

// Spherical barrier of height V0 on a <= r <= b around a well of radius a.
struct LeakySphericalWell {
    double V0 = 8.0;
    double a = 3.0;
    double b = 4.5;
    double m = 0.5;

    double width() const { return b - a; }
};

// Twin rectangular barriers on a <= |x| <= b around a well of half-width a.
struct TwinBarrier {
    double V0 = 8.0;
    double a = 3.0;
    double b = 4.5;
    Parity parity = Parity::Even;
    double m = 0.5;

    double width() const { return b - a; }
};

using ModelVariant = std::variant<DeltaWellInField, LeakySphericalWell, TwinBarrier>;

struct ModelSpec {
    ModelVariant pot;
    PhysicalUnits units;
};

struct EnergyRoot {
    double E = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double residual = 0.0;
    int iterations = 0;
    int index = 0;
};

struct CutoffWidths {
    double estimate_w = 0.0; // from the closed thin-barrier bound
    double actual_w = 0.0;   // bisection on the root count
};

struct Landmark {
    double ka = 0.0;
    double value = 0.0;
};

// ---- delta well in a uniform field -----------------------------------------

// Defect of the implicit energy equation:
//   1 - 2 pi sqrt(-kappa E_b / F) Hi(-kappa E/F) Ai(-kappa E/F),
// kappa = (2mF)^{1/3}; evaluated in scaled form where Hi/Ai individually
// overflow. Zero marks the stationary quasibound energy.
double delta_defect(double E, const DeltaWellInField& spec);

// F_cr = (2 pi Hi(0) Ai(0))^3 sqrt(2m) (-E_b)^{3/2}.
double delta_critical_force(double E_b, double m);

// The unique E < 0 root (throws convergence_error if none, e.g. F >= F_cr).
EnergyRoot delta_root(const DeltaWellInField& spec);

// psi(x) proportional to G_E(x, 0), normalized to the bound-state peak
// sqrt(m lambda) at x = 0, with the bound wave attached as envelope.
Waveform delta_waveform(const EnergyRoot& root, const DeltaWellInField& spec,
                        const std::vector<double>& grid);

// ---- leaky spherical well / twin barrier ------------------------------------

// Barrier mixing coefficient s of u = e^{-kappa r} + s e^{+kappa r};
// throws degenerate_matching when the denominator vanishes.
double leaky_mixing(double k, double kappa, double a);

// Defect of the s-wave criterion; zero at each stationary quasibound ka.
// Requires E = (ka)^2/(2 m a^2) < V0.
double leaky_defect(double ka, const LeakySphericalWell& spec);

// Even-parity twin-barrier criterion defect (odd parity coincides with the
// leaky-sphere criterion).
double twin_even_defect(double ka, const TwinBarrier& spec);

// Closed form of int d(gamma z^2) g(z) exp(gamma z^2) between z0 and z1,
// via the Dawson-scaled error function (finite for either sign of gamma).
double closed_g_exp_integral(double gamma, double z0, double z1);

// Critical widths: estimate from sqrt(2mV0a^2) sinh(sqrt(2mV0 w^2)) = 120
// (first root) resp. 248 (second even root); actual by bisection in w.
CutoffWidths leaky_cutoff(double V0, double a, double m);
CutoffWidths twin_cutoff(double V0, double a, double m);

// Thin-barrier bracketed oscillation 2 g(sqrt(2ka/pi)) {sin,cos}(ka)/ka and
// its first extremum (deepest minimum for odd, first maximum for even).
double thin_barrier_bracket(double ka, Parity parity);
Landmark thin_barrier_landmark(Parity parity);

// All stationary quasibound roots below V0, by a 2000-point ka scan.
std::vector<EnergyRoot> root_scan(const LeakySphericalWell& spec);
std::vector<EnergyRoot> root_scan(const TwinBarrier& spec);

// Piecewise waveform (u = rR for the s-wave class, psi for the twin
// barrier) with the closed-well bound wave as envelope.
Waveform model_waveform(const EnergyRoot& root, const LeakySphericalWell& spec,
                        const std::vector<double>& grid);
Waveform model_waveform(const EnergyRoot& root, const TwinBarrier& spec,
                        const std::vector<double>& grid);

// Bound levels of the closed well (b -> inf limit): zeros of
// (kappa/k) sin ka + cos ka (s-wave/odd) or (kappa/k) cos ka - sin ka (even).
std::vector<double> bound_reference(const LeakySphericalWell& spec);
std::vector<double> bound_reference(const TwinBarrier& spec);

// Potential energy profile (for CSV output).
double potential(const ModelVariant& pot, double x);

} // namespace qbs::models

#pragma once

namespace qbs {

// Natural units with hbar = 1. The default mass m = 1/2 realizes the
// hbar^2 = 2m = 1 convention used by all built-in reference parameters;
// every operation still takes the mass explicitly.
struct PhysicalUnits {
    double hbar = 1.0;
    double mass = 0.5;

    double two_m() const { return 2.0 * mass; }
};

} // namespace qbs

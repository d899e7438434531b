#pragma once

#include <complex>

#include "qbs/errors.hpp"

namespace qbs::timeline {

enum class Parity { Even, Odd };

// Plane-wave timeline component of the uniform-field continuum:
// modulus sqrt(F/2pi), phase F x tau - F^2 tau^3 / (6m).
std::complex<double> xi_uniform(double tau, double x, double F, double m);

// Radial timeline wave for the spherical continuum, order parameter
// 2*alpha = l - 1/2. l = -1 is the formal even-parity case. tau = 0 is a
// singular point and is rejected; tau < 0 follows by time reversal,
// Xi_{-tau} = conj(Xi_tau).
std::complex<double> xi_spherical(int l, double tau, double r, double m);

// Same wave through the Bessel-J representation (used as the second route
// in equivalence checks).
std::complex<double> xi_spherical_bessel_j(int l, double tau, double r, double m);

// Standing-wave timeline components of the free-particle continuum;
// odd uses alpha = -1/4, even alpha = -3/4. x < 0 is extended by parity.
std::complex<double> xi_free(Parity parity, double tau, double x, double m);

// I_tau(x) = int_0^x Xi_tau^+ dx', in closed form; vanishes as x -> inf.
std::complex<double> i_tau(double tau, double x, double m);

} // namespace qbs::timeline

#pragma once

#include "qbs/waveform.hpp"

namespace qbs::greens {

// Uniform-field Green's function for stationary quasibound states,
//   G_E(x,x') = -(pi k^2/F) Hi(-z') Ai(-z)
//               + (pi k^2/F) theta(x-x') [Ai(-z)Bi(-z') - Bi(-z)Ai(-z')],
// z(x) = kappa (x + E/F), kappa = (2mF)^{1/3}. Slope jump 2m at x = x'.
double green_uniform(double E, double x, double x_source, double F, double m);

// s-wave Green's function (E > 0, k = sqrt(2mE)):
//   G_E^0(r,r') = -(2m/r') 2 g(sqrt(2kr'/pi)) sin(kr)/(kr)
//                 + (2m/r') theta(r-r') sin(kr-kr')/(kr).
double green_swave(double E, double r, double r_source, double m);

enum class Parity { Even, Odd };

// Parity components of the free-particle Green's function on x, x' >= 0;
// negative arguments extend by the stated reflection symmetry.
double green_free(Parity parity, double E, double x, double x_source, double m);

struct SelectionOptions {
    // Uniform-field class only: truncation length (in units of 1/kappa,
    // measured downhill from the classical turning point) and the order of
    // the iterated period averaging applied to the oscillatory Airy tail.
    double truncation = 80.0;
    int averaging_order = 5;
};

// The gauge-invariant selection functional whose zero marks a stationary
// quasibound state:
//   UniformField:  int psi dx            (iterated-Cesaro truncated tail)
//   SWave:         int dr/sqrt(r) R      (= 2 int u'/sqrt(r) dr by parts)
//   FreeEven/Odd:  int dx/sqrt(x) dpsi/dx
// Interior regions by adaptive quadrature; sinusoidal tails in closed form.
double selection_apply(WaveClass cls, const Waveform& wave,
                       const SelectionOptions& opt = {});

} // namespace qbs::greens

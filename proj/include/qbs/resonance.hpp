#pragma once

#include <complex>
#include <vector>

#include "qbs/models.hpp"

namespace qbs::resonance {

// An S-matrix pole E_r + i E_i with E_i < 0 (decaying state).
struct ComplexPole {
    double E_r = 0.0;
    double E_i = 0.0;
    double residual = 0.0;
    models::Parity parity = models::Parity::Odd;
};

// Scalar whose zero marks a pole of the scattering matrix: the interior
// wave (sin for odd, cos for even, regular at the origin) is propagated
// across the barrier with complex decay constant sqrt(2m(V0-E)) and the
// purely-outgoing condition u' = ik u is imposed at the outer edge. The
// result is scaled to O(1) and analytic off the negative real E axis
// (principal branches; E on the cut raises a domain_error).
std::complex<double> matching_determinant(std::complex<double> E,
                                          const models::TwinBarrier& spec);
std::complex<double> matching_determinant(std::complex<double> E,
                                          const models::LeakySphericalWell& spec,
                                          models::Parity parity);

// Complex secant refinement from a real-axis seed to residual <= 1e-10;
// poles are returned in the lower half-plane (conjugated if the iteration
// lands above the axis by symmetry of the determinant).
ComplexPole pole_find(std::complex<double> seed, const models::TwinBarrier& spec);
ComplexPole pole_find(std::complex<double> seed,
                      const models::LeakySphericalWell& spec, models::Parity parity);

// Real-axis |determinant| minima over (0, E_max), each refined to a pole;
// deduplicated by 1e-6 proximity and sorted by E_r.
std::vector<ComplexPole> resonance_scan(const models::TwinBarrier& spec, double E_max);
std::vector<ComplexPole> resonance_scan(const models::LeakySphericalWell& spec,
                                        models::Parity parity, double E_max);

} // namespace qbs::resonance

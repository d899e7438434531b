#pragma once

#include <complex>

#include "qbs/errors.hpp"

namespace qbs::specfun {

// Ai, Bi and derivatives at a real argument. Wronskian Ai*Bi' - Ai'*Bi = 1/pi.
struct AiryPair {
    double ai = 0.0;
    double ai_prime = 0.0;
    double bi = 0.0;
    double bi_prime = 0.0;

    double wronskian() const { return ai * bi_prime - ai_prime * bi; }
};

// Exponentially scaled values for z >= 0:
//   ai_e = Ai(z) e^{+xi},  bi_e = Bi(z) e^{-xi},  xi = (2/3) z^{3/2}.
struct AiryScaled {
    double ai_e = 0.0;
    double ai_prime_e = 0.0;
    double bi_e = 0.0;
    double bi_prime_e = 0.0;
};

struct ScorerPair {
    double gi = 0.0;
    double hi = 0.0;
};

// Fresnel auxiliary functions at z >= 0: 0 <= g <= 1/2, g(0) = 1/2,
// g non-increasing with g(inf) = 0; f likewise positive and decreasing.
struct FresnelAux {
    double f = 0.0;
    double g = 0.0;
};

// h_alpha^{+-}(z) = sqrt(pi z/2) exp(-+iz +- i pi(2a+1)/4)
//                   [H_{a+1}^{(1,2)}(z) - i H_a^{(1,2)}(z)].
// kind=+1 uses first-kind Hankels, kind=-1 second-kind.
// Limits: h^+ -> -2i and z*h^- -> alpha + 1/2 as z -> infinity;
// |h^{+-}| ~ z^{alpha+1/2} as z -> 0+.
struct HankelCombo {
    std::complex<double> value;
    double alpha = 0.0;
    int kind = +1;
};

struct ErfPair {
    double erf = 0.0;
    // Dawson-scaled erfi: exp(-x^2) * erfi(x) * sqrt(pi)/2 (never overflows).
    double erfi_scaled = 0.0;
};

struct SphBesselPair {
    double j = 0.0;
    double y = 0.0;
};

// Closed-form half-power sinusoid tails:
//   cos_tail = int_b^inf x^{-1/2} cos(kx + phi) dx
//   sin_tail = int_b^inf x^{-1/2} sin(kx + phi) dx
struct TailPair {
    double cos_tail = 0.0;
    double sin_tail = 0.0;
};

// |z| <= 100; beyond that Bi overflows and a range_error names the threshold.
// Accuracy ~1e-12 relative (1e-14 absolute near the zeros).
AiryPair airy(double z);

// Scaled pair for z >= 0; safe for arbitrarily large z.
AiryScaled airy_scaled(double z);

// Scorer functions; Gi(z) + Hi(z) = Bi(z). Hi requires z <= 30 (it grows
// super-exponentially), Gi inherits airy's |z| <= 100 on the negative side.
ScorerPair scorer(double z);

// Hi(z)*Ai(z), evaluated in scaled form for large positive z where the
// factors individually overflow/underflow. Valid for any z >= -100.
double scorer_hi_times_ai(double z);

FresnelAux fresnel_aux(double z);

ErfPair dawson_erf(double x);

// Dawson's function F(x) = e^{-x^2} int_0^x e^{t^2} dt.
double dawson(double x);

// Spherical Bessel j_l, y_l for 0 <= l <= 25, x > 0. Downward (Miller)
// recurrence for j, upward for y.
SphBesselPair sph_bessel(int l, double x);

// Cylinder Bessel functions of real order alpha >= -1, x > 0, ~1e-10.
double bessel_j_real_order(double alpha, double x);
double bessel_y_real_order(double alpha, double x);

// alpha >= -3/4 and z > 0 (cut along the negative real axis).
HankelCombo h_combo(double alpha, double z, int kind);

TailPair half_power_tail(double k, double phi, double b);

} // namespace qbs::specfun

#pragma once

// Test-side oracles, kept independent of the library's evaluation paths:
// plain Maclaurin sums, composite Simpson quadrature, and tail-corrected
// truncations built only on elementary functions.

#include <functional>

namespace oracle {

struct AiryValues {
    double ai, ai_prime, bi, bi_prime;
};

// 40-term Maclaurin sum of the two standard Airy solutions.
AiryValues airy_maclaurin(double z, int terms = 40);

// Ai(z) for z < 0 from the oscillatory integral (1/pi) int cos(t^3/3 + z t),
// adaptive-Simpson truncated with repeated integration-by-parts tail
// corrections.
double airy_oscillatory_integral(double z);

// Composite Simpson on n panels (n even).
double simpson(const std::function<double(double)>& f, double a, double b, int n);

// Hi(z) = (1/pi) int_0^inf exp(-t^3/3 + z t) dt by Simpson on a truncated
// range (valid for z <= a few).
double scorer_hi_integral(double z);

// 60-term Maclaurin erf.
double erf_series(double x);

// Leading asymptotic series of the Dawson function.
double dawson_asymptotic(double x, int terms = 8);

// Ascending series for spherical j_l and cylinder J_alpha.
double sph_bessel_series(int l, double x);
double bessel_j_series(double alpha, double x);

// int_b^inf x^{-1/2} cos(kx + phi) dx by truncation at n_periods periods
// plus repeated integration-by-parts corrections of the remainder.
double half_power_cos_tail(double k, double phi, double b, int n_periods = 64);

// The same integral by plain truncation at n_periods with a single
// period-average of the endpoint (no analytic corrections).
double half_power_cos_tail_period_averaged(double k, double phi, double b,
                                           int n_periods);

// g(z) recovered from the defining cosine-tail integral.
double fresnel_g_quad(double z);

} // namespace oracle

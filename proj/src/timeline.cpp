#include "qbs/timeline.hpp"

#include <cmath>
#include <numbers>

#include "qbs/specfun.hpp"

namespace qbs::timeline {

namespace {

constexpr double pi = std::numbers::pi;
using cplx = std::complex<double>;
constexpr cplx I{0.0, 1.0};

void check_common(double tau, double m) {
    if (tau == 0.0) throw domain_error("timeline: tau = 0 is a singular point");
    if (!(m > 0.0)) throw domain_error("timeline: requires m > 0");
}

// h-representation shared by the spherical and free-particle classes:
//   sqrt(w) [ z exp(i 2 r^2 z - i pi (2a+1)/2) h_a^+(r^2 z) + z h_a^-(r^2 z) ]
// with z = m/(4 tau) and a caller-supplied prefactor weight w.
cplx xi_h_form(double alpha, double weight, double tau, double r, double m) {
    const double z = m / (4.0 * tau);
    const double arg = r * r * z;
    const cplx hp = specfun::h_combo(alpha, arg, +1).value;
    const cplx hm = specfun::h_combo(alpha, arg, -1).value;
    const cplx phase = std::exp(I * (2.0 * arg - pi * (2.0 * alpha + 1.0) / 2.0));
    return std::sqrt(weight) * (z * phase * hp + z * hm);
}

} // namespace

cplx xi_uniform(double tau, double x, double F, double m) {
    if (!(F > 0.0)) throw domain_error("xi_uniform: requires F > 0");
    if (!(m > 0.0)) throw domain_error("xi_uniform: requires m > 0");
    const double phase = F * x * tau - F * F * tau * tau * tau / (6.0 * m);
    return std::sqrt(F / (2.0 * pi)) * std::exp(I * phase);
}

cplx xi_spherical(int l, double tau, double r, double m) {
    check_common(tau, m);
    if (l < -1) throw domain_error("xi_spherical: requires l >= -1");
    if (!(r > 0.0)) throw domain_error("xi_spherical: requires r > 0");
    if (tau < 0.0) return std::conj(xi_spherical(l, -tau, r, m));
    const double alpha = 0.5 * (l - 0.5);
    return xi_h_form(alpha, 2.0 / (pi * m * r), tau, r, m);
}

cplx xi_spherical_bessel_j(int l, double tau, double r, double m) {
    check_common(tau, m);
    if (l < -1) throw domain_error("xi_spherical_bessel_j: requires l >= -1");
    if (!(r > 0.0)) throw domain_error("xi_spherical_bessel_j: requires r > 0");
    if (tau < 0.0) return std::conj(xi_spherical_bessel_j(l, -tau, r, m));
    const double alpha = 0.5 * (l - 0.5);
    const double z = m / (4.0 * tau);
    const double arg = r * r * z;
    const double ja = specfun::bessel_j_real_order(alpha, arg);
    const double jb = specfun::bessel_j_real_order(alpha + 1.0, arg);
    const cplx phase = std::exp(I * (arg - pi * (2.0 * alpha + 1.0) / 4.0));
    return std::sqrt(4.0 * r / m) * std::pow(z, 1.5) * phase * (cplx(jb) - I * cplx(ja));
}

cplx xi_free(Parity parity, double tau, double x, double m) {
    check_common(tau, m);
    if (tau < 0.0) return std::conj(xi_free(parity, -tau, x, m));
    double sign = 1.0;
    if (x < 0.0) {
        x = -x;
        if (parity == Parity::Odd) sign = -1.0;
    }
    if (x == 0.0) return 0.0; // both components carry a sqrt(x) factor
    const double alpha = (parity == Parity::Odd) ? -0.25 : -0.75;
    return sign * xi_h_form(alpha, x / (pi * m), tau, x, m);
}

cplx i_tau(double tau, double x, double m) {
    check_common(tau, m);
    if (!(x >= 0.0)) throw domain_error("i_tau: requires x >= 0");
    if (tau < 0.0) return std::conj(i_tau(-tau, x, m));
    if (x == 0.0) return 0.0;
    const double z = m / (4.0 * tau);
    const double arg = x * x * z;
    const cplx hp_e = specfun::h_combo(-0.75, arg, +1).value;
    const cplx hp_q = specfun::h_combo(0.25, arg, +1).value;
    const cplx hm_e = specfun::h_combo(-0.75, arg, -1).value;
    const cplx hm_q = specfun::h_combo(0.25, arg, -1).value;
    const cplx phase = std::exp(I * (2.0 * arg + pi / 4.0));
    return std::sqrt(x * x * x / (pi * m)) *
           (phase * z * (hp_e - hp_q) + z * hm_e + z * hm_q);
}

} // namespace qbs::timeline

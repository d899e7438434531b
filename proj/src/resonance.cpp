#include "qbs/resonance.hpp"

#include <algorithm>
#include <cmath>

#include "qbs/solver.hpp"

namespace qbs::resonance {

namespace {

using cplx = std::complex<double>;
constexpr cplx I{0.0, 1.0};

struct BarrierSystem {
    double V0, a, b, m;
    models::Parity parity;
};

cplx determinant(cplx E, const BarrierSystem& s) {
    if (E.imag() == 0.0 && E.real() <= 0.0)
        throw domain_error("matching_determinant: E on the negative real axis (branch cut)");
    const cplx k = std::sqrt(2.0 * s.m * E);
    const cplx kap = std::sqrt(2.0 * s.m * (s.V0 - E)); // Re > 0 below the barrier
    cplx u, du;
    if (s.parity == models::Parity::Odd) {
        u = std::sin(k * s.a);
        du = k * std::cos(k * s.a);
    } else {
        u = std::cos(k * s.a);
        du = -k * std::sin(k * s.a);
    }
    // u = P e^{-kap(r-a)} + Q e^{+kap(r-a)} in the barrier.
    const cplx P = 0.5 * (u - du / kap);
    const cplx Q = 0.5 * (u + du / kap);
    const double w = s.b - s.a;
    // Outgoing condition u' = i k u at r = b, scaled by e^{-kap w}/kap so the
    // result stays O(1) for thick barriers and remains analytic.
    return Q * (kap - I * k) / kap + P * std::exp(-2.0 * kap * w) * (-kap - I * k) / kap;
}

ComplexPole refine(cplx seed, const BarrierSystem& s) {
    auto f = [&s](cplx z) { return determinant(z, s); };
    const double step = 1e-7 * std::max(std::abs(seed), 1e-3);
    const cplx z1 = seed + cplx(step, -step);
    cplx pole = solver::complex_secant(f, seed, z1, 1e-10);
    if (pole.imag() > 0.0) pole = std::conj(pole); // conjugate-symmetric zeros
    ComplexPole out;
    out.E_r = pole.real();
    out.E_i = pole.imag();
    out.residual = std::abs(f(pole));
    out.parity = s.parity;
    return out;
}

std::vector<ComplexPole> scan(const BarrierSystem& s, double E_max) {
    if (!(E_max > 0.0) || E_max > s.V0)
        throw domain_error("resonance_scan: requires 0 < E_max <= V0");
    const int n = 4000;
    const double lo = E_max * 1e-4;
    const std::vector<double> mag = solver::scan_map(
        [&s](double E) { return std::abs(determinant(cplx(E, 0.0), s)); }, lo,
        E_max * (1.0 - 1e-9), n);
    const double step = (E_max * (1.0 - 1e-9) - lo) / (n - 1);
    std::vector<ComplexPole> poles;
    for (int i = 1; i + 1 < n; ++i) {
        if (mag[static_cast<size_t>(i)] < mag[static_cast<size_t>(i - 1)] &&
            mag[static_cast<size_t>(i)] < mag[static_cast<size_t>(i + 1)]) {
            const double E0 = lo + step * i;
            ComplexPole p;
            try {
                p = refine(cplx(E0, 0.0), s);
            } catch (const convergence_error&) {
                continue; // shallow minimum with no pole underneath
            }
            if (!(p.E_r > 0.0) || p.E_r > E_max) continue;
            const bool dup = std::any_of(
                poles.begin(), poles.end(), [&p](const ComplexPole& q) {
                    return std::hypot(q.E_r - p.E_r, q.E_i - p.E_i) < 1e-6;
                });
            if (!dup) poles.push_back(p);
        }
    }
    std::sort(poles.begin(), poles.end(),
              [](const ComplexPole& x, const ComplexPole& y) { return x.E_r < y.E_r; });
    return poles;
}

BarrierSystem from(const models::TwinBarrier& t) {
    return {t.V0, t.a, t.b, t.m, t.parity};
}
BarrierSystem from(const models::LeakySphericalWell& l, models::Parity parity) {
    return {l.V0, l.a, l.b, l.m, parity};
}

} // namespace

cplx matching_determinant(cplx E, const models::TwinBarrier& spec) {
    return determinant(E, from(spec));
}
cplx matching_determinant(cplx E, const models::LeakySphericalWell& spec,
                          models::Parity parity) {
    return determinant(E, from(spec, parity));
}

ComplexPole pole_find(cplx seed, const models::TwinBarrier& spec) {
    return refine(seed, from(spec));
}
ComplexPole pole_find(cplx seed, const models::LeakySphericalWell& spec,
                      models::Parity parity) {
    return refine(seed, from(spec, parity));
}

std::vector<ComplexPole> resonance_scan(const models::TwinBarrier& spec, double E_max) {
    return scan(from(spec), E_max);
}
std::vector<ComplexPole> resonance_scan(const models::LeakySphericalWell& spec,
                                        models::Parity parity, double E_max) {
    return scan(from(spec, parity), E_max);
}

} // namespace qbs::resonance

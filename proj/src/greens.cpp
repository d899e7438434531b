#include "qbs/greens.hpp"

#include <cmath>
#include <numbers>

#include "qbs/solver.hpp"
#include "qbs/specfun.hpp"

namespace qbs::greens {

namespace {

constexpr double pi = std::numbers::pi;

double sinc(double t) {
    if (std::abs(t) < 1e-7) return 1.0 - t * t / 6.0;
    return std::sin(t) / t;
}

// 1 - CDF of the Irwin-Hall(m) distribution: the weight produced by m-fold
// period averaging of a sharp truncation.
double smooth_cutoff(double t, int m) {
    if (t <= 0.0) return 1.0;
    if (t >= m) return 0.0;
    double cdf = 0.0;
    double binom = 1.0;
    double factm = 1.0;
    for (int j = 1; j <= m; ++j) factm *= j;
    for (int j = 0; j <= static_cast<int>(std::floor(t)); ++j) {
        if (j > 0) binom *= static_cast<double>(m - j + 1) / j;
        const double term = binom * std::pow(t - j, m) / factm;
        cdf += (j % 2 == 0) ? term : -term;
    }
    return 1.0 - cdf;
}

// int over [lo, hi] of w'(x)/sqrt(x); the substitution x = t^2 removes the
// endpoint singularity when lo == 0.
double weighted_deriv_integral(const Waveform& wave, double lo, double hi) {
    solver::QuadratureSpec qs;
    qs.rel_tol = 1e-10;
    qs.abs_tol = 1e-13;
    if (lo == 0.0) {
        return solver::adaptive_quad(
            [&wave](double t) { return 2.0 * wave.derivative(t * t); },
            0.0, std::sqrt(hi), qs);
    }
    return solver::adaptive_quad(
        [&wave](double x) { return wave.derivative(x) / std::sqrt(x); }, lo, hi, qs);
}

double selection_halfline(const Waveform& wave, double factor) {
    const Region& tail = wave.tail();
    const Sinusoid* s = std::get_if<Sinusoid>(&tail.form);
    if (s == nullptr || std::isfinite(tail.hi))
        throw contract_error("selection_apply: wave lacks a declared sinusoidal tail");
    double acc = 0.0;
    for (size_t i = 0; i + 1 < wave.regions.size(); ++i)
        acc += weighted_deriv_integral(wave, wave.regions[i].lo, wave.regions[i].hi);
    // d/dx [A sin(kx+phi)] = A k cos(kx+phi); its half-power tail closes in
    // Fresnel form.
    const auto t = specfun::half_power_tail(s->k, s->phi, tail.lo);
    acc += s->amp * s->k * t.cos_tail;
    return factor * acc;
}

double selection_uniform(const Waveform& wave, const SelectionOptions& opt) {
    const AiryComb* tail = std::get_if<AiryComb>(&wave.tail().form);
    const AiryComb* head = wave.regions.empty()
                               ? nullptr
                               : std::get_if<AiryComb>(&wave.regions.front().form);
    if (tail == nullptr || head == nullptr)
        throw contract_error("selection_apply: uniform-field wave needs Airy head and tail regions");
    const double kappa = tail->kappa_f;
    const double shift = tail->x_shift;

    // Left cutoff: uphill side carries only the decaying Ai piece; beyond
    // xi = 45 it is below 3e-20.
    const double z_left = -std::pow(67.5, 2.0 / 3.0);
    const double x_left = z_left / kappa - shift;

    // Right cutoff at z = truncation, smoothed over m local Airy periods.
    const double z_c = opt.truncation;
    const double x_c = z_c / kappa - shift;
    const double period = 2.0 * pi / (kappa * std::sqrt(z_c));
    const int m = opt.averaging_order;

    solver::QuadratureSpec qs;
    qs.rel_tol = 1e-10;
    qs.abs_tol = 1e-12;
    double acc = 0.0;
    // Integrate region by region so breakpoints land on panel edges.
    std::vector<double> cuts{x_left};
    for (const Region& r : wave.regions) {
        if (r.lo > x_left && r.lo < x_c) cuts.push_back(r.lo);
    }
    cuts.push_back(x_c);
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        acc += solver::adaptive_quad([&wave](double x) { return wave.value(x); },
                                     cuts[i], cuts[i + 1], qs);
    acc += solver::adaptive_quad(
        [&wave, x_c, period, m](double x) {
            return wave.value(x) * smooth_cutoff((x - x_c) / period, m);
        },
        x_c, x_c + m * period, qs);
    return acc;
}

} // namespace

double green_uniform(double E, double x, double x_source, double F, double m) {
    if (!(F > 0.0) || !(m > 0.0)) throw domain_error("green_uniform: requires F > 0, m > 0");
    const double kappa = std::cbrt(2.0 * m * F);
    const double z = kappa * (x + E / F);
    const double zs = kappa * (x_source + E / F);
    const double pref = pi * kappa * kappa / F;
    const auto az = specfun::airy(-z);
    const auto azs = specfun::airy(-zs);
    const double hi_s = specfun::scorer(-zs).hi;
    double val = -pref * hi_s * az.ai;
    if (x > x_source) val += pref * (az.ai * azs.bi - az.bi * azs.ai);
    return val;
}

double green_swave(double E, double r, double r_source, double m) {
    if (!(E > 0.0)) throw domain_error("green_swave: requires E > 0 (continuum starts at 0)");
    if (!(r >= 0.0) || !(r_source > 0.0))
        throw domain_error("green_swave: requires r >= 0 and r_source > 0");
    const double k = std::sqrt(2.0 * m * E);
    const double g = specfun::fresnel_aux(std::sqrt(2.0 * k * r_source / pi)).g;
    double val = -(2.0 * m / r_source) * 2.0 * g * sinc(k * r);
    if (r > r_source)
        val += (2.0 * m / r_source) * std::sin(k * r - k * r_source) / (k * r);
    return val;
}

double green_free(Parity parity, double E, double x, double x_source, double m) {
    if (!(E > 0.0)) throw domain_error("green_free: requires E > 0 (continuum starts at 0)");
    double sign = 1.0;
    if (x < 0.0) {
        x = -x;
        if (parity == Parity::Odd) sign = -sign;
    }
    if (x_source < 0.0) {
        x_source = -x_source;
        if (parity == Parity::Odd) sign = -sign;
    }
    const double k = std::sqrt(2.0 * m * E);
    const double g = specfun::fresnel_aux(std::sqrt(2.0 * k * x_source / pi)).g;
    double val;
    if (parity == Parity::Odd)
        val = -(m / k) * 2.0 * g * std::sin(k * x);
    else
        val = (m / k) * 2.0 * g * std::cos(k * x);
    if (x > x_source) val += (m / k) * std::sin(k * x - k * x_source);
    return sign * val;
}

double selection_apply(WaveClass cls, const Waveform& wave,
                       const SelectionOptions& opt) {
    if (wave.regions.empty()) throw contract_error("selection_apply: empty waveform");
    switch (cls) {
        case WaveClass::UniformField:
            return selection_uniform(wave, opt);
        case WaveClass::SWave:
            // int dr/sqrt(r) R with u = r R stored: one integration by parts
            // gives 2 int u'(r)/sqrt(r) dr (boundary terms vanish).
            return selection_halfline(wave, 2.0);
        case WaveClass::FreeEven:
        case WaveClass::FreeOdd:
            return selection_halfline(wave, 1.0);
    }
    throw contract_error("selection_apply: unknown wave class");
}

} // namespace qbs::greens

#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oracle {

namespace {

constexpr double pi = std::numbers::pi;

// Gauss-Legendre 10-point rule, paneled so each panel spans at most one
// oscillation: effectively exact for smooth oscillatory integrands.
constexpr double gl_x[5] = {0.1488743389816312, 0.4333953941292472,
                            0.6794095682990244, 0.8650633666889845,
                            0.9739065285171717};
constexpr double gl_w[5] = {0.2955242247147529, 0.2692667193099963,
                            0.2190863625159820, 0.1494513491505806,
                            0.0666713443086881};

double gl10(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 5; ++i)
        s += gl_w[i] * (f(c - h * gl_x[i]) + f(c + h * gl_x[i]));
    return s * h;
}

double gl_panels(const std::function<double(double)>& f, double a, double b,
                 double panel) {
    const int n = std::max(1, static_cast<int>(std::ceil((b - a) / panel)));
    const double h = (b - a) / n;
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += gl10(f, a + i * h, a + (i + 1) * h);
    return s;
}

// Tail of int_T^inf x^{-p} {cos,sin}(kx+phi) dx by repeated integration by
// parts (descends 8 levels; each gains a factor ~p/(kT)).
double power_trig_tail(double p, bool is_cos, double T, double k, double phi,
                       int depth) {
    if (depth <= 0) return 0.0;
    const double head = std::pow(T, -p) / k;
    if (is_cos) {
        return -head * std::sin(k * T + phi) +
               (p / k) * power_trig_tail(p + 1.0, false, T, k, phi, depth - 1);
    }
    return head * std::cos(k * T + phi) -
           (p / k) * power_trig_tail(p + 1.0, true, T, k, phi, depth - 1);
}

} // namespace

AiryValues airy_maclaurin(double z, int terms) {
    const double c1 = 0.355028053887817239;  // Ai(0)
    const double c2 = 0.258819403792806799;  // -Ai'(0)
    const double z3 = z * z * z;
    double tf = 1.0, f = 1.0, fp = 0.0;
    double tg = z, g = z, gp = 1.0;
    for (int kk = 0; kk < terms; ++kk) {
        tf *= z3 / ((3.0 * kk + 2.0) * (3.0 * kk + 3.0));
        tg *= z3 / ((3.0 * kk + 3.0) * (3.0 * kk + 4.0));
        f += tf;
        g += tg;
        if (z != 0.0) {
            fp += tf * (3.0 * kk + 3.0) / z;
            gp += tg * (3.0 * kk + 4.0) / z;
        }
    }
    AiryValues out;
    out.ai = c1 * f - c2 * g;
    out.ai_prime = c1 * fp - c2 * gp;
    out.bi = std::sqrt(3.0) * (c1 * f + c2 * g);
    out.bi_prime = std::sqrt(3.0) * (c1 * fp + c2 * gp);
    return out;
}

double airy_oscillatory_integral(double z) {
    if (z >= 0.0) throw std::invalid_argument("oracle expects z < 0");
    // phase theta = t^3/3 + z t; stationary point at sqrt(-z)
    const double ts = std::sqrt(-z);
    const double split = ts + 1.0;
    const double T = 20.0;
    auto f = [z](double t) { return std::cos(t * t * t / 3.0 + z * t); };
    // smooth part through the stationary point
    double I = gl_panels(f, 0.0, split, 0.05);
    // oscillatory part, one-period panels
    double t = split;
    while (t < T) {
        const double dtheta = t * t + z; // local frequency
        const double panel = std::min(2.0 * pi / dtheta, T - t);
        I += gl10(f, t, t + panel);
        t += panel;
    }
    // remainder by repeated integration by parts on [-sin theta / theta']
    // 3 boundary layers; the theta-derivatives are polynomial.
    const double tp = T * T + z;         // theta'
    const double th = T * T * T / 3.0 + z * T;
    const double g1 = -2.0 * T / (tp * tp); // (1/theta')'
    const double f2 = -2.0 / (tp * tp * tp) + 12.0 * T * T / (tp * tp * tp * tp);
    I += -std::sin(th) / tp;   // from the first integration by parts
    I += -g1 * std::cos(th) / tp;
    I += f2 * std::sin(th) / (tp * tp); // next layer boundary (size ~1e-11)
    return I / pi;
}

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    if (n % 2 != 0) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return s * h / 3.0;
}

double scorer_hi_integral(double z) {
    if (z > 3.0) throw std::invalid_argument("oracle valid for z <= 3");
    const double T = 6.5; // exp(-t^3/3 + 3t) < 1e-19 relative beyond
    return simpson([z](double t) { return std::exp(-t * t * t / 3.0 + z * t); },
                   0.0, T, 40000) / pi;
}

double erf_series(double x) {
    double t = x, s = x;
    for (int k = 1; k <= 60; ++k) {
        t *= -x * x / k;
        s += t / (2.0 * k + 1.0);
    }
    return 2.0 / std::sqrt(pi) * s;
}

double dawson_asymptotic(double x, int terms) {
    double t = 1.0, s = 1.0;
    for (int k = 1; k <= terms; ++k) {
        t *= (2.0 * k - 1.0) / (2.0 * x * x);
        s += t;
    }
    return s / (2.0 * x);
}

double sph_bessel_series(int l, double x) {
    double dfact = 1.0;
    for (int j = 3; j <= 2 * l + 1; j += 2) dfact *= j;
    double t = std::pow(x, l) / dfact;
    double s = t;
    for (int k = 0; k < 60; ++k) {
        t *= -0.5 * x * x / ((k + 1.0) * (2.0 * l + 2.0 * k + 3.0));
        s += t;
        if (std::abs(t) < 1e-19 * std::abs(s)) break;
    }
    return s;
}

double bessel_j_series(double alpha, double x) {
    double t = std::pow(0.5 * x, alpha) / std::tgamma(alpha + 1.0);
    double s = t;
    for (int k = 0; k < 120; ++k) {
        t *= -0.25 * x * x / ((k + 1.0) * (k + 1.0 + alpha));
        s += t;
        if (std::abs(t) < 1e-19 * std::abs(s) && k > 4) break;
    }
    return s;
}

double half_power_cos_tail(double k, double phi, double b, int n_periods) {
    const double period = 2.0 * pi / k;
    const double T = b + n_periods * period;
    auto f = [k, phi](double x) { return std::cos(k * x + phi) / std::sqrt(x); };
    const double truncated = gl_panels(f, b, T, period);
    return truncated + power_trig_tail(0.5, true, T, k, phi, 8);
}

double half_power_cos_tail_period_averaged(double k, double phi, double b,
                                           int n_periods) {
    const double period = 2.0 * pi / k;
    const double T = b + n_periods * period;
    auto f = [k, phi](double x) { return std::cos(k * x + phi) / std::sqrt(x); };
    const double base = gl_panels(f, b, T, period);
    // Averaging I(t) over t in [T, T+period] adds the triangular-weighted
    // remainder of the integrand.
    const double corr = gl_panels(
        [&](double x) { return f(x) * (T + period - x) / period; }, T, T + period,
        period / 8.0);
    return base + corr;
}

double fresnel_g_quad(double z) {
    const double u0 = 0.5 * pi * z * z;
    if (u0 <= 0.0) return 0.5;
    // g(z) = (1/sqrt(2 pi)) int_{u0}^inf u^{-1/2} cos(u - u0) du
    return half_power_cos_tail(1.0, -u0, u0, 64) / std::sqrt(2.0 * pi);
}

} // namespace oracle

#include "qbs/models.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "qbs/solver.hpp"
#include "qbs/specfun.hpp"

namespace qbs::models {

namespace {

constexpr double pi = std::numbers::pi;

solver::QuadratureSpec barrier_quad_spec() {
    solver::QuadratureSpec qs;
    qs.rel_tol = 1e-11;
    qs.abs_tol = 1e-16;
    return qs;
}

double g_aux(double z) { return specfun::fresnel_aux(z).g; }

struct BarrierIntegrals {
    double decay; // int_a^b g(sqrt(2kr/pi)) e^{kappa(a-r)} dr
    double grow;  // int_a^b g(sqrt(2kr/pi)) e^{kappa(r-a)} dr
};

BarrierIntegrals barrier_integrals(double k, double kappa, double a, double b) {
    const auto qs = barrier_quad_spec();
    const double dec = solver::adaptive_quad(
        [k, kappa, a](double r) {
            return g_aux(std::sqrt(2.0 * k * r / pi)) * std::exp(kappa * (a - r));
        },
        a, b, qs);
    const double gro = solver::adaptive_quad(
        [k, kappa, a](double r) {
            return g_aux(std::sqrt(2.0 * k * r / pi)) * std::exp(kappa * (r - a));
        },
        a, b, qs);
    return {dec, gro};
}

struct WaveNumbers {
    double k;
    double kappa;
    double E;
};

WaveNumbers wave_numbers(double ka, double V0, double a, double m) {
    const double k = ka / a;
    const double E = k * k / (2.0 * m);
    if (!(E < V0)) {
        std::ostringstream msg;
        msg << "defect: E=" << E << " >= V0=" << V0 << " (criterion valid below the barrier top)";
        throw domain_error(msg.str());
    }
    return {k, std::sqrt(2.0 * m * V0 - k * k), E};
}

// Shared scan: refine every sign change of `defect` over the sub-barrier
// ka band into an EnergyRoot list.
std::vector<EnergyRoot> scan_band(const std::function<double(double)>& defect,
                                  double V0, double a, double m) {
    const double ka_max = std::sqrt(2.0 * m * V0) * a;
    const double lo = 1e-4 * ka_max;
    const double hi = ka_max * (1.0 - 1e-6);
    const auto brackets = solver::bracket_scan(defect, lo, hi, 2000);
    std::vector<EnergyRoot> roots;
    const double ka_tol = 1e-13 * ka_max;
    int idx = 0;
    for (const auto& br : brackets) {
        const auto res = solver::refine_root_info(defect, br, ka_tol);
        EnergyRoot r;
        const double k = res.root / a;
        r.E = k * k / (2.0 * m);
        r.bracket_lo = (br.lo / a) * (br.lo / a) / (2.0 * m);
        r.bracket_hi = (br.hi / a) * (br.hi / a) / (2.0 * m);
        r.residual = std::abs(res.f_at_root);
        r.iterations = res.iterations;
        r.index = idx++;
        roots.push_back(r);
    }
    return roots;
}

int count_roots(const std::function<double(double)>& defect, double V0,
                double a, double m) {
    const double ka_max = std::sqrt(2.0 * m * V0) * a;
    return static_cast<int>(
        solver::bracket_scan(defect, 1e-4 * ka_max, ka_max * (1.0 - 1e-6), 2000).size());
}

// Bisection in w for the smallest width whose root count reaches `want`.
double critical_width_by_count(double V0, double a, double m, int want,
                               double w_lo, double w_hi, Parity parity) {
    auto count_at = [&](double w) {
        if (parity == Parity::Odd) {
            LeakySphericalWell s{V0, a, a + w, m};
            return count_roots([&s](double ka) { return leaky_defect(ka, s); }, V0, a, m);
        }
        TwinBarrier s{V0, a, a + w, Parity::Even, m};
        return count_roots([&s](double ka) { return twin_even_defect(ka, s); }, V0, a, m);
    };
    if (count_at(w_lo) >= want || count_at(w_hi) < want)
        throw convergence_error("critical width: root count does not change over the search range");
    while (w_hi - w_lo > 1e-4 * a) {
        const double mid = 0.5 * (w_lo + w_hi);
        if (count_at(mid) >= want)
            w_hi = mid;
        else
            w_lo = mid;
    }
    return 0.5 * (w_lo + w_hi);
}

double golden_extremum(const std::function<double(double)>& f, double lo,
                       double hi, bool maximize) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > 1e-11 * (std::abs(a) + std::abs(b))) {
        const bool pick_c = maximize ? (fc > fd) : (fc < fd);
        if (pick_c) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

// Barrier coefficients of u = A e^{-kappa(x-a)} + B e^{+kappa(x-a)} matched
// to interior value v and slope s at x = a (cleared-denominator form).
struct BarrierCoeffs {
    double A, B;
};
BarrierCoeffs match_barrier(double v, double s, double kappa) {
    return {0.5 * (v - s / kappa), 0.5 * (v + s / kappa)};
}

Waveform assemble_barrier_wave(WaveClass cls, double E, double k, double kappa,
                               double a, double b, bool even,
                               const std::vector<double>& bound_levels,
                               double V0, double m,
                               const std::vector<double>& grid) {
    Waveform w;
    w.cls = cls;
    w.energy = E;
    const double phi0 = even ? 0.5 * pi : 0.0;
    w.regions.push_back({0.0, a, Sinusoid{1.0, k, phi0}});
    const double va = std::sin(k * a + phi0);
    const double sa = k * std::cos(k * a + phi0);
    const auto [A, B] = match_barrier(va, sa, kappa);
    w.regions.push_back({a, b, ExpPair{A, B, kappa, a}});
    const double wlen = b - a;
    const double vb = A * std::exp(-kappa * wlen) + B * std::exp(kappa * wlen);
    const double sb = kappa * (-A * std::exp(-kappa * wlen) + B * std::exp(kappa * wlen));
    const double delta = std::atan2(k * vb, sb) - k * b;
    const double C = std::hypot(vb, sb / k);
    w.regions.push_back({b, std::numeric_limits<double>::infinity(), Sinusoid{C, k, delta}});

    // Envelope: the closed-well bound wave nearest in energy, scaled to
    // match the interior slope (odd) or value (even) at the origin.
    if (!bound_levels.empty()) {
        double Eb = bound_levels.front();
        for (double cand : bound_levels)
            if (std::abs(cand - E) < std::abs(Eb - E)) Eb = cand;
        const double kb = std::sqrt(2.0 * m * Eb);
        const double kapb = std::sqrt(2.0 * m * V0 - kb * kb);
        const double amp = even ? 1.0 : k / kb;
        w.envelope_regions.push_back({0.0, a, Sinusoid{amp, kb, phi0}});
        const double edge = amp * std::sin(kb * a + phi0);
        w.envelope_regions.push_back(
            {a, std::numeric_limits<double>::infinity(), ExpPair{edge, 0.0, kapb, a}});
    }
    w.sample_grid(grid);
    return w;
}

std::vector<double> closed_well_levels(double V0, double a, double m, bool even) {
    const double ka_max = std::sqrt(2.0 * m * V0) * a;
    // k-normalized matching functions share zeros with the (kappa/k) forms
    // but stay finite at k -> 0.
    auto f = [V0, a, m, even](double ka) {
        const double k = ka / a;
        const double kap = std::sqrt(std::max(2.0 * m * V0 - k * k, 0.0));
        return even ? kap * std::cos(ka) - k * std::sin(ka)
                    : kap * std::sin(ka) + k * std::cos(ka);
    };
    const auto brackets = solver::bracket_scan(f, 1e-6 * ka_max, ka_max * (1.0 - 1e-9), 4000);
    std::vector<double> levels;
    for (const auto& br : brackets) {
        const double ka = solver::refine_root(f, br, 1e-14 * ka_max);
        const double k = ka / a;
        levels.push_back(k * k / (2.0 * m));
    }
    return levels;
}

} // namespace

// ---- delta well in a uniform field ------------------------------------------

double delta_defect(double E, const DeltaWellInField& spec) {
    if (!(spec.F > 0.0) || !(spec.lambda > 0.0) || !(spec.m > 0.0))
        throw domain_error("delta_defect: requires lambda, F, m > 0");
    const double kappa = std::cbrt(2.0 * spec.m * spec.F);
    const double Eb = spec.bound_energy();
    const double z = -kappa * E / spec.F;
    const double hi_ai = specfun::scorer_hi_times_ai(z);
    return 1.0 - 2.0 * pi * std::sqrt(-kappa * Eb / spec.F) * hi_ai;
}

double delta_critical_force(double E_b, double m) {
    if (!(E_b < 0.0)) throw domain_error("delta_critical_force: requires E_b < 0");
    const double hi0 = specfun::scorer(0.0).hi;
    const double ai0 = specfun::airy(0.0).ai;
    const double c = 2.0 * pi * hi0 * ai0;
    return c * c * c * std::sqrt(2.0 * m) * std::pow(-E_b, 1.5);
}

EnergyRoot delta_root(const DeltaWellInField& spec) {
    const double Eb = spec.bound_energy();
    auto defect = [&spec](double E) { return delta_defect(E, spec); };
    const auto brackets =
        solver::bracket_scan(defect, 1.5 * Eb, -1e-12 * std::abs(Eb), 2000);
    if (brackets.empty())
        throw convergence_error("delta_root: no E < 0 root (force at or beyond critical?)");
    const auto res = solver::refine_root_info(defect, brackets.front(), 1e-14 * std::abs(Eb));
    EnergyRoot r;
    r.E = res.root;
    r.bracket_lo = brackets.front().lo;
    r.bracket_hi = brackets.front().hi;
    r.residual = std::abs(res.f_at_root);
    r.iterations = res.iterations;
    r.index = 0;
    return r;
}

Waveform delta_waveform(const EnergyRoot& root, const DeltaWellInField& spec,
                        const std::vector<double>& grid) {
    const double E = root.E;
    const double F = spec.F;
    const double m = spec.m;
    const double kappa = std::cbrt(2.0 * m * F);
    const double pref = pi * kappa * kappa / F;
    const double z0 = kappa * E / F;
    const double hi0 = specfun::scorer(-z0).hi;
    const auto a0 = specfun::airy(-z0);
    const double scale = -spec.lambda * std::sqrt(m * spec.lambda);

    Waveform w;
    w.cls = WaveClass::UniformField;
    w.energy = E;
    const double inf = std::numeric_limits<double>::infinity();
    // x < 0: pure Ai branch; x > 0 picks up the step term.
    w.regions.push_back({-inf, 0.0, AiryComb{scale * (-pref * hi0), 0.0, kappa, E / F}});
    w.regions.push_back({0.0, inf,
                         AiryComb{scale * pref * (a0.bi - hi0),
                                  scale * (-pref) * a0.ai, kappa, E / F}});
    const double kb = m * spec.lambda; // bound-state decay constant
    const double peak = std::sqrt(m * spec.lambda);
    w.envelope_regions.push_back({-inf, 0.0, ExpPair{0.0, peak, kb, 0.0}});
    w.envelope_regions.push_back({0.0, inf, ExpPair{peak, 0.0, kb, 0.0}});
    w.sample_grid(grid);
    return w;
}

// ---- leaky spherical well / twin barrier -------------------------------------

double leaky_mixing(double k, double kappa, double a) {
    if (!(k > 0.0) || !(kappa > 0.0) || !(a > 0.0))
        throw domain_error("leaky_mixing: requires k, kappa, a > 0");
    const double den = kappa * std::sin(k * a) - k * std::cos(k * a);
    const double num = kappa * std::sin(k * a) + k * std::cos(k * a);
    if (std::abs(den) < 1e-12 * (kappa + k))
        throw degenerate_matching("leaky_mixing: matching denominator vanishes; use the cleared-denominator wave assembly");
    return std::exp(-2.0 * kappa * a) * num / den;
}

double leaky_defect(double ka, const LeakySphericalWell& spec) {
    const auto wn = wave_numbers(ka, spec.V0, spec.a, spec.m);
    const auto in = barrier_integrals(wn.k, wn.kappa, spec.a, spec.b);
    const double C = 2.0 * spec.m * spec.V0 / wn.kappa;
    const double s = std::sin(ka), c = std::cos(ka);
    const double rk = wn.kappa / wn.k;
    return 1.0 + (rk * s - c) * C * in.decay + (rk * s + c) * C * in.grow;
}

double twin_even_defect(double ka, const TwinBarrier& spec) {
    const auto wn = wave_numbers(ka, spec.V0, spec.a, spec.m);
    const auto in = barrier_integrals(wn.k, wn.kappa, spec.a, spec.b);
    const double C = 2.0 * spec.m * spec.V0 / wn.kappa;
    const double s = std::sin(ka), c = std::cos(ka);
    const double rk = wn.kappa / wn.k;
    return -1.0 + (rk * c + s) * C * in.decay + (rk * c - s) * C * in.grow;
}

double closed_g_exp_integral(double gamma, double z0, double z1) {
    if (!(std::isfinite(gamma) && std::isfinite(z0) && std::isfinite(z1)))
        throw domain_error("closed_g_exp_integral: arguments must be finite");
    if (!(z0 >= 0.0) || !(z1 >= z0))
        throw domain_error("closed_g_exp_integral: requires 0 <= z0 <= z1");
    if (z0 == z1) return 0.0;
    if (std::abs(gamma) < 1e-14) {
        // Degenerate limit: the measure d(gamma z^2) collapses; integrate
        // directly (the expression below divides 0 by 0 otherwise).
        return solver::adaptive_quad(
            [gamma](double z) {
                return 2.0 * gamma * z * g_aux(z) * std::exp(gamma * z * z);
            },
            z0, z1, barrier_quad_spec());
    }
    auto antideriv = [gamma](double z) {
        const auto fg = specfun::fresnel_aux(z);
        const double ez = std::exp(gamma * z * z);
        double t;
        if (gamma > 0) {
            const double rg = std::sqrt(gamma);
            t = ez * specfun::dawson(rg * z) / rg;
        } else {
            const double rg = std::sqrt(-gamma);
            t = std::sqrt(pi) / (2.0 * rg) * std::erf(rg * z);
        }
        return (fg.g - 0.5 * pi / gamma * fg.f) * ez + t;
    };
    const double norm = 1.0 + pi * pi / (4.0 * gamma * gamma);
    return (antideriv(z1) - antideriv(z0)) / norm;
}

CutoffWidths leaky_cutoff(double V0, double a, double m) {
    if (!(V0 > 0.0) || !(a > 0.0)) throw domain_error("leaky_cutoff: requires V0, a > 0");
    const double S = std::sqrt(2.0 * m * V0 * a * a);
    CutoffWidths out;
    out.estimate_w = std::asinh(120.0 / S) / std::sqrt(2.0 * m * V0);
    out.actual_w = critical_width_by_count(V0, a, m, 1, 0.2 * a, 1.0 * a, Parity::Odd);
    return out;
}

CutoffWidths twin_cutoff(double V0, double a, double m) {
    if (!(V0 > 0.0) || !(a > 0.0)) throw domain_error("twin_cutoff: requires V0, a > 0");
    const double S = std::sqrt(2.0 * m * V0 * a * a);
    CutoffWidths out;
    out.estimate_w = std::asinh(248.0 / S) / std::sqrt(2.0 * m * V0);
    out.actual_w = critical_width_by_count(V0, a, m, 2, 0.3 * a, 1.2 * a, Parity::Even);
    return out;
}

double thin_barrier_bracket(double ka, Parity parity) {
    if (!(ka > 0.0)) throw domain_error("thin_barrier_bracket: requires ka > 0");
    const double g = g_aux(std::sqrt(2.0 * ka / pi));
    const double osc = (parity == Parity::Odd) ? std::sin(ka) : std::cos(ka);
    return 2.0 * g * osc / ka;
}

Landmark thin_barrier_landmark(Parity parity) {
    if (parity == Parity::Odd) {
        const double ka = golden_extremum(
            [](double x) { return thin_barrier_bracket(x, Parity::Odd); }, 3.0, 5.5, false);
        return {ka, thin_barrier_bracket(ka, Parity::Odd)};
    }
    const double ka = golden_extremum(
        [](double x) { return thin_barrier_bracket(x, Parity::Even); }, 4.8, 7.0, true);
    return {ka, thin_barrier_bracket(ka, Parity::Even)};
}

std::vector<EnergyRoot> root_scan(const LeakySphericalWell& spec) {
    return scan_band([&spec](double ka) { return leaky_defect(ka, spec); },
                     spec.V0, spec.a, spec.m);
}

std::vector<EnergyRoot> root_scan(const TwinBarrier& spec) {
    if (spec.parity == Parity::Odd) {
        // Identical problem to s-waves in the leaky spherical well.
        LeakySphericalWell eq{spec.V0, spec.a, spec.b, spec.m};
        return root_scan(eq);
    }
    return scan_band([&spec](double ka) { return twin_even_defect(ka, spec); },
                     spec.V0, spec.a, spec.m);
}

Waveform model_waveform(const EnergyRoot& root, const LeakySphericalWell& spec,
                        const std::vector<double>& grid) {
    const double k = std::sqrt(2.0 * spec.m * root.E);
    const double kappa = std::sqrt(2.0 * spec.m * (spec.V0 - root.E));
    return assemble_barrier_wave(WaveClass::SWave, root.E, k, kappa, spec.a,
                                 spec.b, false, bound_reference(spec), spec.V0,
                                 spec.m, grid);
}

Waveform model_waveform(const EnergyRoot& root, const TwinBarrier& spec,
                        const std::vector<double>& grid) {
    const double k = std::sqrt(2.0 * spec.m * root.E);
    const double kappa = std::sqrt(2.0 * spec.m * (spec.V0 - root.E));
    const bool even = spec.parity == Parity::Even;
    return assemble_barrier_wave(even ? WaveClass::FreeEven : WaveClass::FreeOdd,
                                 root.E, k, kappa, spec.a, spec.b, even,
                                 bound_reference(spec), spec.V0, spec.m, grid);
}

std::vector<double> bound_reference(const LeakySphericalWell& spec) {
    return closed_well_levels(spec.V0, spec.a, spec.m, false);
}

std::vector<double> bound_reference(const TwinBarrier& spec) {
    return closed_well_levels(spec.V0, spec.a, spec.m, spec.parity == Parity::Even);
}

double potential(const ModelVariant& pot, double x) {
    if (const auto* d = std::get_if<DeltaWellInField>(&pot)) return -d->F * x;
    if (const auto* l = std::get_if<LeakySphericalWell>(&pot))
        return (x >= l->a && x <= l->b) ? l->V0 : 0.0;
    const auto& t = std::get<TwinBarrier>(pot);
    const double ax = std::abs(x);
    return (ax >= t.a && ax <= t.b) ? t.V0 : 0.0;
}

} // namespace qbs::models

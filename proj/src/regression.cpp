#include "qbs/regression.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "qbs/greens.hpp"
#include "qbs/models.hpp"
#include "qbs/resonance.hpp"
#include "qbs/solver.hpp"
#include "qbs/specfun.hpp"
#include "qbs/timeline.hpp"

namespace qbs::regression {

namespace {

constexpr double pi = std::numbers::pi;

// Reference parameters: hbar^2 = 2m = 1 throughout. Delta well normalized
// to E_b = -1 (lambda = 2); barrier systems at V0 a^2 = 72 with a = 3,
// barrier width w = a/2.
constexpr double kMass = 0.5;
constexpr double kEb = -1.0;
constexpr double kLambda = 2.0;
constexpr double kWellRadius = 3.0;
constexpr double kBarrierV0 = 8.0;
constexpr double kBarrierOuter = 4.5;

models::LeakySphericalWell ref_leaky() { return {kBarrierV0, kWellRadius, kBarrierOuter, kMass}; }
models::TwinBarrier ref_twin(models::Parity p) {
    return {kBarrierV0, kWellRadius, kBarrierOuter, p, kMass};
}
models::DeltaWellInField ref_delta(double f_frac) {
    const double fcr = models::delta_critical_force(kEb, kMass);
    return {kLambda, f_frac * fcr, kMass};
}

void add_check(CriterionResult& cr, const std::string& name, double measured,
               double expected, double tol) {
    Check c;
    c.name = name;
    c.measured = measured;
    c.expected = expected;
    c.tolerance = tol;
    c.passed = std::abs(measured - expected) <= tol;
    cr.checks.push_back(c);
}

void add_flag(CriterionResult& cr, const std::string& name, bool ok) {
    Check c;
    c.name = name;
    c.measured = ok ? 1.0 : 0.0;
    c.expected = 1.0;
    c.tolerance = 0.0;
    c.passed = ok;
    cr.checks.push_back(c);
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double fit_r2(const std::vector<double>& xs, const std::vector<double>& ys) {
    const size_t n = xs.size();
    const double slope = fit_slope(xs, ys);
    double sx = 0, sy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double xbar = sx / n, ybar = sy / n;
    const double icept = ybar - slope * xbar;
    double ss_res = 0, ss_tot = 0;
    for (size_t i = 0; i < n; ++i) {
        const double fit = icept + slope * xs[i];
        ss_res += (ys[i] - fit) * (ys[i] - fit);
        ss_tot += (ys[i] - ybar) * (ys[i] - ybar);
    }
    return 1.0 - ss_res / ss_tot;
}

// Green's function of the s-wave / free classes as a piecewise-sinusoidal
// waveform in its first argument (tail combined into one sinusoid).
Waveform green_as_wave(WaveClass cls, double E, double x_source, double m) {
    const double k = std::sqrt(2.0 * m * E);
    const double g = specfun::fresnel_aux(std::sqrt(2.0 * k * x_source / pi)).g;
    double c1, phi1; // inner piece  c1 * sin(kx + phi1)
    if (cls == WaveClass::SWave) {
        c1 = -(2.0 * m / (x_source * k)) * 2.0 * g; // u = r G
        phi1 = 0.0;
    } else if (cls == WaveClass::FreeOdd) {
        c1 = -(m / k) * 2.0 * g;
        phi1 = 0.0;
    } else {
        c1 = (m / k) * 2.0 * g;
        phi1 = 0.5 * pi;
    }
    const double c2 = (cls == WaveClass::SWave) ? 2.0 * m / (x_source * k) : m / k;
    // Beyond the source: c1 sin(kx+phi1) + c2 sin(kx - k x_source) as a
    // single sinusoid A sin(kx + phi).
    const double cs = c1 * std::cos(phi1) + c2 * std::cos(k * x_source);
    const double sn = c1 * std::sin(phi1) - c2 * std::sin(k * x_source);
    const double A = std::hypot(cs, sn);
    const double phi = std::atan2(sn, cs);
    Waveform w;
    w.cls = cls;
    w.energy = E;
    w.regions.push_back({0.0, x_source, Sinusoid{c1, k, phi1}});
    w.regions.push_back({x_source, std::numeric_limits<double>::infinity(), Sinusoid{A, k, phi}});
    return w;
}

double green_eval(WaveClass cls, double E, double x, double xs, double m, double F) {
    switch (cls) {
        case WaveClass::UniformField: return greens::green_uniform(E, x, xs, F, m);
        case WaveClass::SWave: return greens::green_swave(E, x, xs, m);
        case WaveClass::FreeEven: return greens::green_free(greens::Parity::Even, E, x, xs, m);
        case WaveClass::FreeOdd: return greens::green_free(greens::Parity::Odd, E, x, xs, m);
    }
    return 0.0;
}

// ---- criteria ---------------------------------------------------------------

CriterionResult criterion_delta_roots(double ts) {
    CriterionResult cr;
    cr.id = 1;
    cr.title = "delta well in uniform field: quasibound roots at 0.1 and 0.9 F_cr";
    const double e1 = models::delta_root(ref_delta(0.1)).E / std::abs(kEb);
    add_check(cr, "E(0.1 F_cr)/|E_b|", e1, -1.0955, 1.0955e-4 * ts);
    const double e2 = models::delta_root(ref_delta(0.9)).E / std::abs(kEb);
    add_check(cr, "E(0.9 F_cr)/|E_b|", e2, -0.46404, 4.6404e-6 * ts);
    return cr;
}

CriterionResult criterion_zero_force(double ts) {
    CriterionResult cr;
    cr.id = 2;
    cr.title = "zero-force limit and quadratic Stark scaling";
    const double e = models::delta_root(ref_delta(1e-4)).E;
    add_check(cr, "|E - E_b|/|E_b| at 1e-4 F_cr", std::abs(e - kEb) / std::abs(kEb),
              0.0, 1e-6 * ts);
    std::vector<double> lx, ly;
    for (double f : {1e-3, 1.78e-3, 3.16e-3, 5.62e-3, 1e-2}) {
        const double root = models::delta_root(ref_delta(f)).E;
        lx.push_back(std::log(f));
        ly.push_back(std::log(std::abs(root - kEb)));
    }
    add_check(cr, "fitted exponent of |E(F)-E_b| vs F", fit_slope(lx, ly), 2.0, 0.1 * ts);
    return cr;
}

CriterionResult criterion_leaky_roots(double ts) {
    CriterionResult cr;
    cr.id = 3;
    cr.title = "leaky spherical well: two stationary quasibound roots";
    const auto roots = models::root_scan(ref_leaky());
    add_check(cr, "root count below V0", static_cast<double>(roots.size()), 2.0, 0.0);
    if (roots.size() >= 1) add_check(cr, "E_1", roots[0].E, 1.067, 2e-3 * ts);
    if (roots.size() >= 2) add_check(cr, "E_2", roots[1].E, 2.331, 2e-3 * ts);
    return cr;
}

CriterionResult criterion_critical_widths(double ts) {
    CriterionResult cr;
    cr.id = 4;
    cr.title = "critical barrier widths (estimate and actual), both parities";
    const auto lc = models::leaky_cutoff(kBarrierV0, kWellRadius, kMass);
    add_check(cr, "leaky estimate w/a", lc.estimate_w / kWellRadius, 0.394, 0.394 * 0.01 * ts);
    add_check(cr, "leaky actual w/a", lc.actual_w / kWellRadius, 0.425, 0.425 * 0.01 * ts);
    const auto tc = models::twin_cutoff(kBarrierV0, kWellRadius, kMass);
    add_check(cr, "twin-even estimate w/a", tc.estimate_w / kWellRadius, 0.480, 0.480 * 0.01 * ts);
    add_check(cr, "twin-even actual w/a", tc.actual_w / kWellRadius, 0.517, 0.517 * 0.01 * ts);
    return cr;
}

CriterionResult criterion_landmarks(double ts) {
    CriterionResult cr;
    cr.id = 5;
    cr.title = "thin-barrier oscillation landmarks";
    const auto lo = models::thin_barrier_landmark(models::Parity::Odd);
    add_check(cr, "odd minimum location ka", lo.ka, 4.2149, 1e-4 + 0.0 * ts);
    add_check(cr, "odd minimum value", lo.value, -1.0 / 120.0, (1.0 / 120.0) * 0.05 * ts);
    const auto le = models::thin_barrier_landmark(models::Parity::Even);
    add_check(cr, "even maximum location ka", le.ka, 5.90, 5e-3 + 0.0 * ts);
    add_check(cr, "even maximum value", le.value, 1.0 / 248.0, (1.0 / 248.0) * 0.05 * ts);
    return cr;
}

CriterionResult criterion_twin_even(double ts) {
    CriterionResult cr;
    cr.id = 6;
    cr.title = "twin barrier: even-parity root; odd parity identical to s-waves";
    const auto even = models::root_scan(ref_twin(models::Parity::Even));
    add_check(cr, "even root count", static_cast<double>(even.size()), 1.0, 0.0);
    if (!even.empty()) add_check(cr, "even E_1", even[0].E, 0.199, 2e-3 * ts);
    const auto odd = models::root_scan(ref_twin(models::Parity::Odd));
    const auto leaky = models::root_scan(ref_leaky());
    double dev = (odd.size() == leaky.size()) ? 0.0 : 1.0;
    if (odd.size() == leaky.size())
        for (size_t i = 0; i < odd.size(); ++i)
            dev = std::max(dev, std::abs(odd[i].E - leaky[i].E));
    add_check(cr, "max |E_odd - E_swave|", dev, 0.0, 1e-12 * ts);
    return cr;
}

CriterionResult criterion_resonances(double ts) {
    CriterionResult cr;
    cr.id = 7;
    cr.title = "S-matrix poles vs stationary roots";
    const auto odd = resonance_scan(ref_twin(models::Parity::Odd), kBarrierV0);
    const double odd_ref[3] = {0.874, 3.444, 7.421};
    add_check(cr, "antisymmetric pole count", static_cast<double>(odd.size()), 3.0, 0.0);
    for (size_t i = 0; i < odd.size() && i < 3; ++i) {
        std::ostringstream name;
        name << "antisymmetric E_r[" << i << "]";
        add_check(cr, name.str(), odd[i].E_r, odd_ref[i], 1e-2 * ts);
    }
    if (!odd.empty())
        add_check(cr, "lowest antisymmetric E_i", odd[0].E_i, -0.718e-4, 5e-7 * ts);
    const auto even = resonance_scan(ref_twin(models::Parity::Even), kBarrierV0);
    const double even_ref[3] = {0.219, 1.955, 5.298};
    add_check(cr, "symmetric pole count", static_cast<double>(even.size()), 3.0, 0.0);
    for (size_t i = 0; i < even.size() && i < 3; ++i) {
        std::ostringstream name;
        name << "symmetric E_r[" << i << "]";
        add_check(cr, name.str(), even[i].E_r, even_ref[i], 1e-2 * ts);
    }
    return cr;
}

CriterionResult criterion_properties(double ts) {
    CriterionResult cr;
    cr.id = 8;
    cr.title = "property suites: identities, Green's functions, timeline, convergence";
    std::mt19937 rng(0xC0FFEE);

    { // Airy Wronskian, 500 random points in [-12, 8]
        std::uniform_real_distribution<double> dz(-12.0, 8.0);
        double worst = 0.0;
        for (int i = 0; i < 500; ++i) {
            const auto p = specfun::airy(dz(rng));
            worst = std::max(worst, std::abs(p.wronskian() * pi - 1.0));
        }
        add_check(cr, "Airy Wronskian max rel dev", worst, 0.0, 1e-12 * ts);
    }
    { // Gi + Hi = Bi on [-10, 5]
        std::uniform_real_distribution<double> dz(-10.0, 5.0);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const double z = dz(rng);
            const auto s = specfun::scorer(z);
            const double bi = specfun::airy(z).bi;
            worst = std::max(worst, std::abs((s.gi + s.hi - bi) / bi));
        }
        add_check(cr, "Gi+Hi-Bi max rel dev", worst, 0.0, 1e-11 * ts);
    }
    add_check(cr, "g(0)", specfun::fresnel_aux(0.0).g, 0.5, 0.0);
    {
        const auto hp = specfun::h_combo(-0.25, 200.0, +1);
        add_check(cr, "|h+(200) + 2i|", std::abs(hp.value + std::complex<double>(0, 2)),
                  0.0, 5e-2 * ts);
        const auto hm = specfun::h_combo(0.25, 200.0, -1);
        add_check(cr, "|200 h-(200) - 3/4|", std::abs(200.0 * hm.value - 0.75), 0.0,
                  5e-2 * ts);
    }

    { // Green's functions: ODE residual, jump, selection annihilation
        std::uniform_real_distribution<double> dE(0.5, 4.0);
        std::uniform_real_distribution<double> dx(0.4, 2.5);
        const double m = kMass, F = 1.0;
        double worst_ode = 0.0, worst_jump = 0.0, worst_sel = 0.0;
        for (int i = 0; i < 10; ++i) {
            const double E = dE(rng);
            const double xs = dx(rng);
            for (WaveClass cls : {WaveClass::UniformField, WaveClass::SWave,
                                  WaveClass::FreeEven, WaveClass::FreeOdd}) {
                const double Eu = (cls == WaveClass::UniformField) ? E - 2.0 : E;
                // ODE residual at a probe point away from the source
                // (5-point second difference on a 1e-3 grid).
                const double x = xs + 0.8;
                const double h = 1e-3;
                const double gm2 = green_eval(cls, Eu, x - 2 * h, xs, m, F);
                const double gm = green_eval(cls, Eu, x - h, xs, m, F);
                const double g0 = green_eval(cls, Eu, x, xs, m, F);
                const double gp = green_eval(cls, Eu, x + h, xs, m, F);
                const double gp2 = green_eval(cls, Eu, x + 2 * h, xs, m, F);
                const double d2 =
                    (-gp2 + 16.0 * gp - 30.0 * g0 + 16.0 * gm - gm2) / (12.0 * h * h);
                double pot = 0.0; // potential term of the bare Hamiltonian
                if (cls == WaveClass::UniformField) pot = -F * x;
                double resid;
                if (cls == WaveClass::SWave) {
                    // radial operator: -(1/2m r^2) d/dr(r^2 dG/dr) - E G
                    const double d1 = (-gp2 + 8.0 * gp - 8.0 * gm + gm2) / (12.0 * h);
                    resid = -(d2 + 2.0 / x * d1) / (2.0 * m) - Eu * g0;
                } else {
                    resid = -d2 / (2.0 * m) + (pot - Eu) * g0;
                }
                worst_ode = std::max(worst_ode, std::abs(resid));
                // Slope jump at the source via centered offsets with one
                // Richardson step to cancel the curvature term.
                auto jump_fd = [&](double hh) {
                    return (green_eval(cls, Eu, xs + hh, xs, m, F) +
                            green_eval(cls, Eu, xs - hh, xs, m, F) -
                            2.0 * green_eval(cls, Eu, xs, xs, m, F)) / hh;
                };
                const double eps = 1e-4;
                const double jump = 2.0 * jump_fd(0.5 * eps) - jump_fd(eps);
                double expected_jump = 2.0 * m;
                if (cls == WaveClass::SWave) expected_jump = 2.0 * m / (xs * xs);
                if (cls == WaveClass::FreeEven || cls == WaveClass::FreeOdd) expected_jump = m;
                worst_jump = std::max(worst_jump, std::abs(jump - expected_jump));
                // selection annihilation
                double sel;
                if (cls == WaveClass::UniformField) {
                    Waveform w;
                    w.cls = cls;
                    w.energy = Eu;
                    const double kappa = std::cbrt(2.0 * m * F);
                    const double pref = pi * kappa * kappa / F;
                    const double zs = kappa * (xs + Eu / F);
                    const double hi_s = specfun::scorer(-zs).hi;
                    const auto as = specfun::airy(-zs);
                    const double inf = std::numeric_limits<double>::infinity();
                    w.regions.push_back({-inf, xs, AiryComb{-pref * hi_s, 0.0, kappa, Eu / F}});
                    w.regions.push_back({xs, inf,
                                         AiryComb{pref * (as.bi - hi_s), -pref * as.ai,
                                                  kappa, Eu / F}});
                    sel = greens::selection_apply(cls, w);
                } else {
                    sel = greens::selection_apply(cls, green_as_wave(cls, Eu, xs, m));
                }
                worst_sel = std::max(worst_sel, std::abs(sel));
            }
        }
        add_check(cr, "Green ODE residual (worst)", worst_ode, 0.0, 1e-6 * ts);
        add_check(cr, "Green slope jump deviation (worst)", worst_jump, 0.0, 1e-5 * ts);
        add_check(cr, "selection annihilation (worst)", worst_sel, 0.0, 1e-7 * ts);
    }

    { // timeline representation equivalence and time reversal
        std::uniform_real_distribution<double> dtau(0.1, 10.0);
        std::uniform_real_distribution<double> dr(0.1, 20.0);
        std::uniform_int_distribution<int> dl(0, 2);
        double worst_eq = 0.0, worst_tr = 0.0;
        for (int i = 0; i < 100; ++i) {
            const int l = dl(rng);
            const double tau = dtau(rng);
            const double r = dr(rng);
            const auto a = timeline::xi_spherical(l, tau, r, kMass);
            const auto b = timeline::xi_spherical_bessel_j(l, tau, r, kMass);
            worst_eq = std::max(worst_eq, std::abs(a - b) / std::abs(a));
            const auto c = timeline::xi_spherical(l, -tau, r, kMass);
            worst_tr = std::max(worst_tr, std::abs(c - std::conj(a)) / std::abs(a));
        }
        add_check(cr, "timeline J-form vs h-form (worst rel)", worst_eq, 0.0, 1e-9 * ts);
        add_check(cr, "time reversal (worst rel)", worst_tr, 0.0, 1e-14 * ts);
    }

    { // thick-barrier exponential convergence of the lowest s-wave root
        const auto bound = models::bound_reference(ref_leaky());
        const double Eb1 = bound.front();
        const double kap = std::sqrt(2.0 * kMass * (kBarrierV0 - Eb1));
        std::vector<double> xs, ys, gaps;
        for (double frac : {1.0, 1.5, 2.0, 2.5}) {
            models::LeakySphericalWell s = ref_leaky();
            s.b = s.a + frac * s.a;
            const auto roots = models::root_scan(s);
            const double gap = std::abs(roots.front().E - Eb1);
            gaps.push_back(gap);
            xs.push_back(kap * frac * kWellRadius);
            ys.push_back(std::log(gap));
        }
        bool decreasing = true;
        for (size_t i = 0; i + 1 < gaps.size(); ++i)
            if (gaps[i + 1] >= gaps[i]) decreasing = false;
        add_flag(cr, "thick-barrier gap decreasing", decreasing);
        add_check(cr, "thick-barrier log-gap linearity R^2", fit_r2(xs, ys), 1.0,
                  0.05 * ts);
    }
    return cr;
}

} // namespace

CriterionResult run_criterion(int id, double tol_scale) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult cr;
    switch (id) {
        case 1: cr = criterion_delta_roots(tol_scale); break;
        case 2: cr = criterion_zero_force(tol_scale); break;
        case 3: cr = criterion_leaky_roots(tol_scale); break;
        case 4: cr = criterion_critical_widths(tol_scale); break;
        case 5: cr = criterion_landmarks(tol_scale); break;
        case 6: cr = criterion_twin_even(tol_scale); break;
        case 7: cr = criterion_resonances(tol_scale); break;
        case 8: cr = criterion_properties(tol_scale); break;
        default: throw contract_error("run_criterion: id must be 1..8");
    }
    cr.passed = true;
    for (const auto& c : cr.checks) cr.passed = cr.passed && c.passed;
    cr.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return cr;
}

std::vector<CriterionResult> regression_suite(double tol_scale) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 8; ++id) out.push_back(run_criterion(id, tol_scale));
    return out;
}

int print_report(std::ostream& os, const std::vector<CriterionResult>& results) {
    int failed = 0;
    for (const auto& cr : results) {
        os << (cr.passed ? "PASS" : "FAIL") << " criterion " << cr.id << ": "
           << cr.title << "\n";
        for (const auto& c : cr.checks) {
            std::ostringstream line;
            line.precision(10);
            line << "     " << (c.passed ? "ok  " : "FAIL") << " " << c.name
                 << ": measured=" << c.measured << " expected=" << c.expected
                 << " tol=" << c.tolerance;
            os << line.str() << "\n";
        }
        if (!cr.passed) ++failed;
    }
    os << (failed == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
       << results.size() - static_cast<size_t>(failed) << "/" << results.size()
       << " passed)\n";
    return failed;
}

} // namespace qbs::regression

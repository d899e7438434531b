#include "qbs/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace qbs::solver {

namespace {

// Gauss-Kronrod (7,15) nodes and weights on [-1,1] (QUADPACK values).
constexpr double kronrod_x[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kronrod_w[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double gauss_w[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
    double kronrod;
    double err;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kron = kronrod_w[7] * fc;
    double gauss = gauss_w[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kronrod_x[i];
        const double fsum = f(c - dx) + f(c + dx);
        kron += kronrod_w[i] * fsum;
        if (i % 2 == 1) gauss += gauss_w[i / 2] * fsum;
    }
    kron *= h;
    gauss *= h;
    return {kron, std::abs(kron - gauss)};
}

struct WorstPanel {
    double a = 0.0, b = 0.0, err = 0.0;
};

double quad_recurse(const std::function<double(double)>& f, double a, double b,
                    double tol_abs, const QuadratureSpec& spec, int depth,
                    WorstPanel& worst) {
    const PanelResult r = gk15(f, a, b);
    const double local_tol = std::max(tol_abs, spec.rel_tol * std::abs(r.kronrod));
    if (r.err <= local_tol || (b - a) < 1e-15 * (std::abs(a) + std::abs(b) + 1.0))
        return r.kronrod;
    if (depth >= spec.max_depth) {
        if (r.err > worst.err) worst = {a, b, r.err};
        std::ostringstream msg;
        msg << "adaptive_quad: max_depth=" << spec.max_depth
            << " exceeded; worst subinterval [" << worst.a << ", " << worst.b
            << "] err=" << worst.err;
        throw convergence_error(msg.str());
    }
    const double c = 0.5 * (a + b);
    return quad_recurse(f, a, c, 0.5 * tol_abs, spec, depth + 1, worst) +
           quad_recurse(f, c, b, 0.5 * tol_abs, spec, depth + 1, worst);
}

} // namespace

double adaptive_quad(const std::function<double(double)>& f, double a, double b,
                     const QuadratureSpec& spec) {
    if (!(a <= b)) throw domain_error("adaptive_quad: requires a <= b");
    if (spec.rel_tol <= 0 || spec.abs_tol <= 0 || spec.max_depth < 10)
        throw contract_error("adaptive_quad: invalid QuadratureSpec");
    if (a == b) return 0.0;
    WorstPanel worst;
    return quad_recurse(f, a, b, spec.abs_tol, spec, 0, worst);
}

std::vector<double> scan_map_serial(const std::function<double(double)>& f,
                                    double lo, double hi, int n) {
    std::vector<double> out(static_cast<size_t>(n));
    const double step = (n > 1) ? (hi - lo) / (n - 1) : 0.0;
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = f(lo + step * i);
    return out;
}

std::vector<double> scan_map(const std::function<double(double)>& f,
                             double lo, double hi, int n) {
    std::vector<double> out(static_cast<size_t>(n));
    const double step = (n > 1) ? (hi - lo) / (n - 1) : 0.0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = f(lo + step * i);
    return out;
}

std::vector<Bracket> bracket_scan(const std::function<double(double)>& f,
                                  double lo, double hi, int n) {
    if (n < 2) throw contract_error("bracket_scan: need n >= 2");
    if (!(lo < hi)) throw domain_error("bracket_scan: requires lo < hi");
    const std::vector<double> v = scan_map(f, lo, hi, n);
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) {
        if (!std::isfinite(v[static_cast<size_t>(i)])) {
            std::ostringstream msg;
            msg << "bracket_scan: f non-finite at x=" << lo + step * i;
            throw convergence_error(msg.str());
        }
    }
    std::vector<Bracket> out;
    for (int i = 0; i + 1 < n; ++i) {
        const double xa = lo + step * i;
        const double xb = lo + step * (i + 1);
        const double fa = v[static_cast<size_t>(i)];
        const double fb = v[static_cast<size_t>(i + 1)];
        if (fa == 0.0) {
            out.push_back(Bracket{xa, xa, 0.0, 0.0});
        } else if (fb != 0.0 && std::signbit(fa) != std::signbit(fb)) {
            out.push_back(Bracket{xa, xb, fa, fb});
        }
    }
    const double f_last = v.back();
    if (f_last == 0.0) out.push_back(Bracket{hi, hi, 0.0, 0.0});
    return out;
}

RefineResult refine_root_info(const std::function<double(double)>& f,
                              const Bracket& br, double tol) {
    if (br.degenerate()) return {br.lo, 0.0, 0};
    if (!(br.lo < br.hi) || !(br.f_lo * br.f_hi < 0.0))
        throw contract_error("refine_root: invalid bracket");

    double a = br.lo, b = br.hi;
    double fa = br.f_lo, fb = br.f_hi;
    double best_x = (std::abs(fa) < std::abs(fb)) ? a : b;
    double best_f = std::min(std::abs(fa), std::abs(fb));
    int iters = 0;

    // Brent-style: keep a bisection fallback so the interval always shrinks.
    double c = a, fc = fa;
    double d = b - a, e = d;
    while (true) {
        ++iters;
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 0.5 * tol + 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b);
        const double xm = 0.5 * (c - b);
        if (std::abs(fb) < best_f) { best_f = std::abs(fb); best_x = b; }
        if (std::abs(xm) <= tol1 || fb == 0.0) break;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0) == (fc > 0)) {
            c = a; fc = fa;
            d = b - a; e = d;
        }
        if (iters > 200) break;
    }
    if (std::abs(fb) < best_f) { best_f = std::abs(fb); best_x = b; }
    return {best_x, best_f, iters};
}

double refine_root(const std::function<double(double)>& f, const Bracket& b,
                   double tol) {
    return refine_root_info(f, b, tol).root;
}

std::complex<double> complex_secant(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    std::complex<double> z0, std::complex<double> z1, double tol) {
    if (z0 == z1) throw contract_error("complex_secant: z0 == z1");
    std::complex<double> f0 = f(z0);
    std::complex<double> f1 = f(z1);
    std::vector<std::complex<double>> trace{z0, z1};
    for (int it = 0; it < 100; ++it) {
        if (std::abs(f1) <= tol) return z1;
        const std::complex<double> df = f1 - f0;
        if (df == std::complex<double>(0.0, 0.0)) break;
        const std::complex<double> z2 = z1 - f1 * (z1 - z0) / df;
        z0 = z1; f0 = f1;
        z1 = z2; f1 = f(z2);
        trace.push_back(z2);
    }
    std::ostringstream msg;
    msg << "complex_secant: no convergence to |f|<=" << tol << " in 100 iterations; trace tail:";
    const size_t n0 = trace.size() > 6 ? trace.size() - 6 : 0;
    for (size_t i = n0; i < trace.size(); ++i)
        msg << " (" << trace[i].real() << "," << trace[i].imag() << ")";
    throw convergence_error(msg.str());
}

} // namespace qbs::solver

#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "qbs/errors.hpp"

namespace qbs::solver {

struct QuadratureSpec {
    double rel_tol = 1e-11;
    double abs_tol = 1e-14;
    int max_depth = 50;
};

// A sign-change interval: lo < hi and f_lo * f_hi < 0, except for the
// degenerate case of an exact grid zero, stored as lo == hi, f == 0.
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    double f_lo = 0.0;
    double f_hi = 0.0;

    bool degenerate() const { return lo == hi; }
};

struct RefineResult {
    double root = 0.0;
    double f_at_root = 0.0;
    int iterations = 0;
};

// Adaptive Gauss-Kronrod (7,15) quadrature on [a, b].
// Error <= max(rel_tol*|I|, abs_tol); exact on polynomials up to the
// Kronrod degree on a single panel. Throws convergence_error naming the
// worst subinterval if max_depth is exceeded.
double adaptive_quad(const std::function<double(double)>& f, double a, double b,
                     const QuadratureSpec& spec = {});

// Evaluates f on the inclusive uniform n-point grid over [lo, hi].
// The OpenMP version merges by index, so results are bitwise identical to
// the serial reference for any thread count.
std::vector<double> scan_map(const std::function<double(double)>& f,
                             double lo, double hi, int n);
std::vector<double> scan_map_serial(const std::function<double(double)>& f,
                                    double lo, double hi, int n);

// All sign changes of f on the uniform n-point grid, in order. Exact grid
// zeros come back as degenerate brackets. Non-finite f at a grid point
// raises convergence_error with the location.
std::vector<Bracket> bracket_scan(const std::function<double(double)>& f,
                                  double lo, double hi, int n);

// Hybrid bisection / inverse-quadratic refinement. Never leaves the
// bracket; terminates once the interval is <= tol, returning the iterate
// with the smallest |f| seen.
double refine_root(const std::function<double(double)>& f, const Bracket& b,
                   double tol);
RefineResult refine_root_info(const std::function<double(double)>& f,
                              const Bracket& b, double tol);

// Complex secant iteration to |f| <= tol within 100 steps; throws
// convergence_error carrying the iterate trace otherwise.
std::complex<double> complex_secant(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    std::complex<double> z0, std::complex<double> z1, double tol);

} // namespace qbs::solver

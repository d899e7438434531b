// Benchmark: OpenMP grid kernel vs the serial reference on a realistic
// workload (leaky-well defect over the sub-barrier band, the inner loop of
// every root scan and critical-width bisection).

#include <chrono>
#include <cmath>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qbs/models.hpp"
#include "qbs/solver.hpp"

namespace {

double time_run(const std::function<std::vector<double>(void)>& fn, int reps,
                double* checksum) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto v = fn();
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        best = std::min(best, dt);
        double s = 0.0;
        for (double x : v) s += x;
        *checksum = s;
    }
    return best;
}

} // namespace

int main() {
    const qbs::models::LeakySphericalWell spec{8.0, 3.0, 4.5, 0.5};
    auto defect = [&spec](double ka) { return qbs::models::leaky_defect(ka, spec); };
    const double ka_max = std::sqrt(2.0 * spec.m * spec.V0) * spec.a;
    const double lo = 1e-4 * ka_max, hi = ka_max * (1.0 - 1e-6);
    const int n = 2000;

    double sum_serial = 0.0, sum_parallel = 0.0;
    const double t_serial = time_run(
        [&] { return qbs::solver::scan_map_serial(defect, lo, hi, n); }, 3, &sum_serial);
    const double t_parallel = time_run(
        [&] { return qbs::solver::scan_map(defect, lo, hi, n); }, 3, &sum_parallel);

#ifdef _OPENMP
    std::printf("threads:   %d\n", omp_get_max_threads());
#else
    std::printf("threads:   1 (OpenMP disabled)\n");
#endif
    std::printf("grid:      %d defect evaluations\n", n);
    std::printf("serial:    %.3f s\n", t_serial);
    std::printf("parallel:  %.3f s\n", t_parallel);
    std::printf("speedup:   %.2fx\n", t_serial / t_parallel);
    std::printf("checksums: %.17g / %.17g (%s)\n", sum_serial, sum_parallel,
                sum_serial == sum_parallel ? "bitwise identical" : "MISMATCH");
    return sum_serial == sum_parallel ? 0 : 1;
}

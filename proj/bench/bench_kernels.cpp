// Compares the OpenMP kernels against their serial reference implementations:
// worst-case error evaluation and point generation. Also times the two
// construction algorithms for context.
//
// Usage: bench_kernels [m] [d] [reps]

#include "latticeforge/construct.hpp"
#include "latticeforge/error_eval.hpp"
#include "latticeforge/points.hpp"
#include "latticeforge/threads.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

using namespace lf;

namespace {

double time_once(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double best_of(const std::function<void()>& fn, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r)
        best = std::min(best, time_once(fn));
    return best;
}

} // namespace

int main(int argc, char** argv) {
    const int m = argc > 1 ? std::atoi(argv[1]) : 14;
    const int d = argc > 2 ? std::atoi(argv[2]) : 100;
    const int reps = argc > 3 ? std::atoi(argv[3]) : 3;

    const LatticeConfig cfg(m, d);
    const auto gamma = WeightSequence::geometric(0.95);
    const auto w = ReductionIndices::logarithmic(1.5);

    std::printf("m=%d (N=%lld) d=%d reps=%d workers=%d\n", m,
                static_cast<long long>(cfg.n), d, reps, worker_count());

    const double t_fast = best_of([&] { construct_reduced_fast(cfg, w, gamma); }, reps);
    const double t_base = best_of([&] { construct_baseline(cfg, gamma); }, reps);
    std::printf("%-34s %10.4fs\n", "construct reduced (fast)", t_fast);
    std::printf("%-34s %10.4fs\n", "construct baseline (w=0)", t_base);

    const auto z = construct_reduced_fast(cfg, w, gamma).vector;

    double serial_value = 0.0, parallel_value = 0.0;
    const double t_serial =
        best_of([&] { serial_value = wce_product_serial(z, 2.0, gamma); }, reps);
    const double t_parallel =
        best_of([&] { parallel_value = worst_case_error(z, 2.0, gamma).value; }, reps);
    std::printf("%-34s %10.4fs\n", "worst-case error, serial reference", t_serial);
    std::printf("%-34s %10.4fs  speedup %.2fx  rel.dev %.2e\n",
                "worst-case error, blocked+OpenMP", t_parallel, t_serial / t_parallel,
                std::abs(parallel_value - serial_value) /
                    std::max(1e-300, std::abs(serial_value)));

    LatticePointSet pts_serial{cfg, {}}, pts_parallel{cfg, {}};
    const double t_gen_serial = best_of([&] { pts_serial = generate_points_serial(z); }, reps);
    const double t_gen_parallel = best_of([&] { pts_parallel = generate_points(z); }, reps);
    std::printf("%-34s %10.4fs\n", "point generation, serial reference", t_gen_serial);
    std::printf("%-34s %10.4fs  speedup %.2fx  identical %s\n",
                "point generation, OpenMP", t_gen_parallel, t_gen_serial / t_gen_parallel,
                pts_serial.coords == pts_parallel.coords ? "yes" : "NO");
    return 0;
}

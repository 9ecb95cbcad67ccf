#include "latticeforge/kernel.hpp"
#include "latticeforge/errors.hpp"
#include "latticeforge/stable_sum.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>

namespace lf {

namespace {

constexpr double TWO_PI = 2.0 * M_PI;

double zeta_euler_maclaurin(double alpha) {
    // direct series over n <= M plus integral/derivative tail corrections;
    // the first omitted correction is O(M^{-alpha-5})
    const int M = 8192;
    StableSum s;
    for (int n = 1; n <= M; ++n)
        s.add(std::pow(static_cast<double>(n), -alpha));
    const double Md = static_cast<double>(M);
    s.add(std::pow(Md, 1.0 - alpha) / (alpha - 1.0));
    s.add(-0.5 * std::pow(Md, -alpha));
    s.add(alpha / 12.0 * std::pow(Md, -alpha - 1.0));
    s.add(-alpha * (alpha + 1.0) * (alpha + 2.0) / 720.0 * std::pow(Md, -alpha - 3.0));
    return s.value();
}

} // namespace

double riemann_zeta(double alpha) {
    if (!(alpha > 1.0))
        throw validation_error("zeta requires alpha > 1");
    static std::map<double, double> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(alpha);
    if (it != cache.end())
        return it->second;
    const double v = zeta_euler_maclaurin(alpha);
    cache.emplace(alpha, v);
    return v;
}

bool kernel_has_closed_form(double alpha) { return alpha == 2.0 || alpha == 4.0; }

double fourier_kernel(double x, double alpha, double tol) {
    if (!(alpha > 1.0))
        throw validation_error("fourier_kernel requires alpha > 1");
    if (!(tol > 0.0))
        throw validation_error("fourier_kernel requires tol > 0");
    x -= std::floor(x);

    if (alpha == 2.0) {
        // 2 pi^2 B_2(x)
        return 2.0 * M_PI * M_PI * (x * x - x + 1.0 / 6.0);
    }
    if (alpha == 4.0) {
        // -(2 pi)^4 B_4(x) / 4!
        const double b4 = ((x - 2.0) * x + 1.0) * x * x - 1.0 / 30.0;
        const double c = TWO_PI * TWO_PI * TWO_PI * TWO_PI / 24.0;
        return -c * b4;
    }

    return fourier_kernel_series(x, alpha, tol);
}

double fourier_kernel_series(double x, double alpha, double tol) {
    if (!(alpha > 1.0))
        throw validation_error("fourier_kernel_series requires alpha > 1");
    if (!(tol > 0.0))
        throw validation_error("fourier_kernel_series requires tol > 0");
    x -= std::floor(x);
    if (x == 0.0)
        return 2.0 * riemann_zeta(alpha);

    // Truncation length: the smaller of the monotone tail bound
    //   2 L^{1-alpha} / (alpha - 1) <= tol
    // and the partial-summation bound for oscillating terms
    //   4 (L+1)^{-alpha} / sin(pi x) <= tol.
    const double s = std::sin(M_PI * std::min(x, 1.0 - x));
    const double l_mono = std::pow(2.0 / ((alpha - 1.0) * tol), 1.0 / (alpha - 1.0));
    const double l_osc = std::pow(4.0 / (tol * s), 1.0 / alpha);
    const double l_req = std::min(l_mono, l_osc);
    if (!(l_req < 5e7))
        throw validation_error("fourier_kernel_series: tolerance unreachable for this alpha/x");
    const auto L = static_cast<std::int64_t>(std::ceil(l_req));

    StableSum sum;
    for (std::int64_t l = 1; l <= L; ++l)
        sum.add(std::cos(TWO_PI * static_cast<double>(l) * x) /
                std::pow(static_cast<double>(l), alpha));
    return 2.0 * sum.value();
}

} // namespace lf

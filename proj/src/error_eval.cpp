#include "latticeforge/error_eval.hpp"
#include "latticeforge/errors.hpp"
#include "latticeforge/kernel.hpp"
#include "latticeforge/logsin.hpp"
#include "latticeforge/stable_sum.hpp"
#include "latticeforge/threads.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace lf {

namespace {

// Fixed block length for the deterministic reduction: per-block partial sums
// are combined in ascending block order, independent of the worker count.
constexpr std::int64_t WCE_BLOCK = 4096;

constexpr double SERIES_KERNEL_TOL = 1e-10;

std::vector<double> kernel_table(std::int64_t n, double alpha, double tol) {
    std::vector<double> ktab(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 64) num_threads(worker_count())
    for (std::int64_t r = 0; r < n; ++r)
        ktab[static_cast<std::size_t>(r)] =
            fourier_kernel(static_cast<double>(r) / static_cast<double>(n), alpha, tol);
    return ktab;
}

std::vector<double> weight_values(const WeightSequence& gamma, int d) {
    std::vector<double> g(static_cast<std::size_t>(d));
    for (int j = 1; j <= d; ++j)
        g[static_cast<std::size_t>(j - 1)] = gamma(j);
    return g;
}

double product_over_points(const GeneratingVector& z, const std::vector<double>& g,
                           const std::vector<double>& ktab) {
    const std::int64_t n = z.points();
    const std::int64_t mask = n - 1;
    const int d = z.dimension();
    const auto& zfull = z.full_all();

    const std::int64_t nblocks = (n + WCE_BLOCK - 1) / WCE_BLOCK;
    std::vector<double> partial(static_cast<std::size_t>(nblocks));
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (std::int64_t b = 0; b < nblocks; ++b) {
        StableSum local;
        const std::int64_t hi = std::min(n, (b + 1) * WCE_BLOCK);
        for (std::int64_t k = b * WCE_BLOCK; k < hi; ++k) {
            double prod = 1.0;
            for (int j = 0; j < d; ++j)
                prod *= 1.0 + g[static_cast<std::size_t>(j)] *
                                  ktab[static_cast<std::size_t>((k * zfull[static_cast<std::size_t>(j)]) & mask)];
            local.add(prod);
        }
        partial[static_cast<std::size_t>(b)] = local.value();
    }

    StableSum total;
    for (std::int64_t b = 0; b < nblocks; ++b)
        total.add(partial[static_cast<std::size_t>(b)]);
    const double value = total.value() / static_cast<double>(n) - 1.0;
    // overflow in a per-k product (huge weights) propagates as inf/nan
    if (!std::isfinite(value))
        return std::numeric_limits<double>::infinity();
    return value;
}

} // namespace

const char* to_string(ErrorMethod m) {
    switch (m) {
    case ErrorMethod::ClosedForm: return "closed-form";
    case ErrorMethod::TruncatedSeries: return "truncated-series";
    case ErrorMethod::BruteForce: return "brute-force";
    }
    return "?";
}

ErrorReport worst_case_error(const GeneratingVector& z, double alpha,
                             const WeightSequence& gamma) {
    if (!(alpha > 1.0))
        throw validation_error("worst_case_error requires alpha > 1");
    const std::int64_t n = z.points();
    const int d = z.dimension();
    const bool closed = kernel_has_closed_form(alpha);
    const double tol = closed ? 0.0 : SERIES_KERNEL_TOL;

    const std::vector<double> g = weight_values(gamma, d);
    const std::vector<double> ktab = kernel_table(n, alpha, closed ? 1.0 : tol);
    const double value = product_over_points(z, g, ktab);

    ErrorReport rep;
    rep.value = value;
    rep.method = closed ? ErrorMethod::ClosedForm : ErrorMethod::TruncatedSeries;
    if (!closed) {
        // per-factor kernel perturbation <= tol, propagated through the product
        double gsum = 0.0, prodcap = 1.0;
        const double kcap = 2.0 * riemann_zeta(alpha) + tol;
        for (double gj : g) {
            gsum += gj;
            prodcap *= 1.0 + gj * kcap;
        }
        rep.tail_bound = tol * gsum * prodcap;
    }
    return rep;
}

double wce_product_serial(const GeneratingVector& z, double alpha,
                          const WeightSequence& gamma) {
    if (!(alpha > 1.0))
        throw validation_error("wce_product_serial requires alpha > 1");
    const std::int64_t n = z.points();
    const std::int64_t mask = n - 1;
    const int d = z.dimension();
    const bool closed = kernel_has_closed_form(alpha);
    const std::vector<double> g = weight_values(gamma, d);
    const auto& zfull = z.full_all();

    std::vector<double> ktab(static_cast<std::size_t>(n));
    for (std::int64_t r = 0; r < n; ++r)
        ktab[static_cast<std::size_t>(r)] = fourier_kernel(
            static_cast<double>(r) / static_cast<double>(n), alpha, closed ? 1.0 : SERIES_KERNEL_TOL);

    StableSum total;
    for (std::int64_t k = 0; k < n; ++k) {
        double prod = 1.0;
        for (int j = 0; j < d; ++j)
            prod *= 1.0 + g[static_cast<std::size_t>(j)] *
                              ktab[static_cast<std::size_t>((k * zfull[static_cast<std::size_t>(j)]) & mask)];
        total.add(prod);
    }
    return total.value() / static_cast<double>(n) - 1.0;
}

ErrorReport wce_dual_bruteforce(const GeneratingVector& z, double alpha,
                                const WeightSequence& gamma, std::int64_t cutoff) {
    if (!(alpha > 1.0))
        throw validation_error("wce_dual_bruteforce requires alpha > 1");
    if (cutoff < 1)
        throw validation_error("wce_dual_bruteforce requires cutoff >= 1");
    const int d = z.dimension();
    const double span = 2.0 * static_cast<double>(cutoff) + 1.0;
    if (d > 3 || std::pow(span, d) > 7e7)
        throw guard_error("wce_dual_bruteforce is feasible only for d <= 3 and (2L+1)^d <= 7e7");

    const std::int64_t n = z.points();
    const auto& zfull = z.full_all();
    const std::vector<double> g = weight_values(gamma, d);

    std::vector<std::int64_t> ell(static_cast<std::size_t>(d), -cutoff);
    StableSum sum;
    bool done = false;
    while (!done) {
        std::int64_t dot = 0;
        bool zero = true;
        for (int j = 0; j < d; ++j) {
            dot += ell[static_cast<std::size_t>(j)] * zfull[static_cast<std::size_t>(j)];
            if (ell[static_cast<std::size_t>(j)] != 0)
                zero = false;
        }
        if (!zero && dot % n == 0) {
            double term = 1.0;
            for (int j = 0; j < d; ++j) {
                const std::int64_t lj = ell[static_cast<std::size_t>(j)];
                if (lj != 0)
                    term *= g[static_cast<std::size_t>(j)] *
                            std::pow(std::abs(static_cast<double>(lj)), -alpha);
            }
            sum.add(term);
        }
        // odometer, last coordinate fastest
        int j = d - 1;
        while (j >= 0) {
            if (++ell[static_cast<std::size_t>(j)] <= cutoff)
                break;
            ell[static_cast<std::size_t>(j)] = -cutoff;
            --j;
        }
        done = j < 0;
    }

    // Omitted mass: single-coordinate directions are exact lattice tails; the
    // coupled part drops the dual condition down to one-solution-per-block.
    const double zeta = riemann_zeta(alpha);
    double tail = 0.0;
    for (int i = 0; i < d; ++i) {
        const int e = std::max(0, z.config().m - z.w(i + 1));
        const double block = std::pow(2.0, e);
        const double q0 = std::floor(static_cast<double>(cutoff) / block) + 1.0;
        tail += g[static_cast<std::size_t>(i)] * 2.0 * std::pow(block, -alpha) *
                (std::pow(q0, -alpha) + std::pow(q0, 1.0 - alpha) / (alpha - 1.0));
        if (d > 1) {
            const double lp1 = static_cast<double>(cutoff) + 1.0;
            const double tau =
                2.0 * (std::pow(lp1, -alpha) + std::pow(lp1, 1.0 - alpha) / ((alpha - 1.0) * block));
            double rest = 1.0;
            for (int j = 0; j < d; ++j)
                if (j != i)
                    rest *= 1.0 + 2.0 * g[static_cast<std::size_t>(j)] * zeta;
            tail += g[static_cast<std::size_t>(i)] * tau * (rest - 1.0);
        }
    }

    return ErrorReport{sum.value(), ErrorMethod::BruteForce, tail};
}

double t_gamma_bruteforce(const GeneratingVector& z, const WeightSequence& gamma,
                          double alpha) {
    const int d = z.dimension();
    const int m = z.config().m;
    if (d > 3 || m > 6)
        throw guard_error("t_gamma_bruteforce is feasible only for d <= 3 and m <= 6");

    const std::int64_t n = z.points();
    const auto& zfull = z.full_all();
    const std::vector<double> g = weight_values(gamma, d);

    std::vector<std::int64_t> half(static_cast<std::size_t>(d));
    for (int j = 1; j <= d; ++j) {
        const int e = std::max(0, m - z.w(j));
        half[static_cast<std::size_t>(j - 1)] = (std::int64_t{1} << e) - 1;
    }

    std::vector<std::int64_t> ell(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
        ell[static_cast<std::size_t>(j)] = -half[static_cast<std::size_t>(j)];
    StableSum sum;
    bool done = false;
    while (!done) {
        std::int64_t dot = 0;
        bool zero = true;
        for (int j = 0; j < d; ++j) {
            dot += ell[static_cast<std::size_t>(j)] * zfull[static_cast<std::size_t>(j)];
            if (ell[static_cast<std::size_t>(j)] != 0)
                zero = false;
        }
        if (!zero && dot % n == 0) {
            double term = 1.0;
            for (int j = 0; j < d; ++j) {
                const std::int64_t lj = ell[static_cast<std::size_t>(j)];
                if (lj != 0)
                    term *= g[static_cast<std::size_t>(j)] *
                            std::pow(std::abs(static_cast<double>(lj)), -alpha);
            }
            sum.add(term);
        }
        int j = d - 1;
        while (j >= 0) {
            if (++ell[static_cast<std::size_t>(j)] <= half[static_cast<std::size_t>(j)])
                break;
            ell[static_cast<std::size_t>(j)] = -half[static_cast<std::size_t>(j)];
            --j;
        }
        done = j < 0;
    }
    return sum.value();
}

double t_gamma_character(const GeneratingVector& z, const WeightSequence& gamma,
                         double alpha) {
    const int d = z.dimension();
    const int m = z.config().m;
    const std::int64_t n = z.points();
    const std::int64_t mask = n - 1;
    const auto& zfull = z.full_all();
    const std::vector<double> g = weight_values(gamma, d);

    std::int64_t work = 0;
    for (int j = 1; j <= d; ++j)
        work += (std::int64_t{1} << std::max(0, m - z.w(j))) - 1;
    if (n * work > std::int64_t{200'000'000})
        throw guard_error("t_gamma_character: instance too large");

    std::vector<double> ctab(static_cast<std::size_t>(n));
    for (std::int64_t r = 0; r < n; ++r)
        ctab[static_cast<std::size_t>(r)] =
            std::cos(2.0 * M_PI * static_cast<double>(r) / static_cast<double>(n));

    // c_j(r) = 2 sum_{l=1}^{h_j} cos(2 pi l r / n) / l^alpha, indexed by the
    // residue r = k z_j mod n
    std::vector<std::vector<double>> cj(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        const std::int64_t h = (std::int64_t{1} << std::max(0, m - z.w(j + 1))) - 1;
        auto& col = cj[static_cast<std::size_t>(j)];
        col.assign(static_cast<std::size_t>(n), 0.0);
#pragma omp parallel for schedule(static) num_threads(worker_count())
        for (std::int64_t r = 0; r < n; ++r) {
            StableSum s;
            for (std::int64_t l = 1; l <= h; ++l)
                s.add(ctab[static_cast<std::size_t>((l * r) & mask)] /
                      std::pow(static_cast<double>(l), alpha));
            col[static_cast<std::size_t>(r)] = 2.0 * s.value();
        }
    }

    StableSum total;
    for (std::int64_t k = 0; k < n; ++k) {
        double prod = 1.0;
        for (int j = 0; j < d; ++j)
            prod *= 1.0 + g[static_cast<std::size_t>(j)] *
                              cj[static_cast<std::size_t>(j)]
                                [static_cast<std::size_t>((k * zfull[static_cast<std::size_t>(j)]) & mask)];
        total.add(prod - 1.0);
    }
    return total.value() / static_cast<double>(n);
}

double h_quantity(const GeneratingVector& z, int s, const WeightSequence& gamma) {
    const int m = z.config().m;
    if (s < 1 || s > z.d_star())
        throw validation_error("h_quantity requires 1 <= s <= d*");
    const std::int64_t n = z.points();
    const std::int64_t mask = n - 1;
    const LogSinTable table(m);
    const std::vector<double> g = weight_values(gamma, s);
    const auto& zfull = z.full_all();

    StableSum total;
    for (int r = 1; r <= s; ++r) {
        const std::int64_t block = std::int64_t{1} << (m - z.w(r));
        const double gr = g[static_cast<std::size_t>(r - 1)];
        for (std::int64_t k = 0; k < n; ++k) {
            if (k % block == 0)
                continue;
            double prod = 1.0;
            for (int j = 0; j < r - 1; ++j)
                prod *= 1.0 + g[static_cast<std::size_t>(j)] *
                                  table[(k * zfull[static_cast<std::size_t>(j)]) & mask];
            total.add(gr * table[(k * zfull[static_cast<std::size_t>(r - 1)]) & mask] * prod);
        }
    }
    return total.value();
}

double truncation_bound(const LatticeConfig& cfg, const ReductionIndices& w,
                        const WeightSequence& gamma, double alpha) {
    if (!(alpha > 1.0))
        throw validation_error("truncation_bound requires alpha > 1");
    const double fac = 4.0 * riemann_zeta(alpha);
    StableSum sum;
    double prod = 1.0;
    for (int j = 1; j <= cfg.d; ++j) {
        const int e = std::max(0, cfg.m - w(j));
        sum.add(gamma(j) * fac * std::pow(2.0, -alpha * static_cast<double>(e)) * prod);
        prod *= 1.0 + gamma(j) * fac;
    }
    return sum.value();
}

double t_gamma_bound(const LatticeConfig& cfg, const ReductionIndices& w,
                     const WeightSequence& gamma) {
    const double logn = std::log(static_cast<double>(cfg.n));
    const double six = 6.0 * logn;
    const int dstar = w.d_star(cfg.m, cfg.d);
    StableSum sum;
    double prod = 1.0;
    for (int j = 1; j <= dstar; ++j) {
        sum.add(gamma(j) * six * std::pow(2.0, static_cast<double>(w(j))) * prod);
        prod *= 1.0 + gamma(j) * six;
    }
    return 2.0 * six / static_cast<double>(cfg.n) * sum.value();
}

double h_quantity_bound(const LatticeConfig& cfg, const WeightSequence& gamma, int s) {
    if (s < 1 || s > cfg.d)
        throw validation_error("h_quantity_bound requires 1 <= s <= d");
    const double log4 = std::log(4.0);
    double prod = 1.0;
    for (int j = 1; j <= s; ++j)
        prod *= 1.0 + gamma(j) * log4;
    return static_cast<double>(cfg.n) * (prod - 1.0);
}

BoundReport compute_bounds(const LatticeConfig& cfg, const ReductionIndices& w,
                           const WeightSequence& gamma, double alpha) {
    BoundReport rep;
    rep.truncation_bound = truncation_bound(cfg, w, gamma, alpha);
    rep.t_gamma_bound = t_gamma_bound(cfg, w, gamma);
    rep.h_bound = h_quantity_bound(cfg, gamma, w.d_star(cfg.m, cfg.d));
    return rep;
}

} // namespace lf

#include "latticeforge/points.hpp"
#include "latticeforge/errors.hpp"
#include "latticeforge/stable_sum.hpp"
#include "latticeforge/threads.hpp"

#include <cmath>
#include <complex>
#include <cstdio>

namespace lf {

namespace {

void fill_row(const GeneratingVector& z, std::int64_t k, double* row) {
    const std::int64_t n = z.points();
    const int d = z.dimension();
    const auto& zfull = z.full_all();
    for (int j = 0; j < d; ++j) {
        const std::int64_t r = (k * zfull[static_cast<std::size_t>(j)]) % n;
        row[j] = static_cast<double>(r) / static_cast<double>(n);
    }
}

} // namespace

LatticePointSet generate_points(const GeneratingVector& z) {
    const std::int64_t n = z.points();
    const int d = z.dimension();
    LatticePointSet p{z.config(), {}};
    p.coords.resize(static_cast<std::size_t>(n * d));
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (std::int64_t k = 0; k < n; ++k)
        fill_row(z, k, p.coords.data() + k * d);
    return p;
}

LatticePointSet generate_points_serial(const GeneratingVector& z) {
    const std::int64_t n = z.points();
    const int d = z.dimension();
    LatticePointSet p{z.config(), {}};
    p.coords.resize(static_cast<std::size_t>(n * d));
    for (std::int64_t k = 0; k < n; ++k)
        fill_row(z, k, p.coords.data() + k * d);
    return p;
}

double qmc_estimate(const std::function<double(std::span<const double>)>& f,
                    const LatticePointSet& points) {
    const std::int64_t n = points.cfg.n;
    StableSum sum;
    for (std::int64_t k = 0; k < n; ++k)
        sum.add(f(points.row(k)));
    return sum.value() / static_cast<double>(n);
}

int character_check(const std::vector<std::int64_t>& ell, const GeneratingVector& z) {
    if (static_cast<int>(ell.size()) != z.dimension())
        throw validation_error("character_check frequency vector has wrong length");
    const std::int64_t n = z.points();
    std::int64_t dot = 0;
    for (int j = 0; j < z.dimension(); ++j)
        dot += ell[static_cast<std::size_t>(j)] * z.full(j + 1);
    std::complex<double> acc(0.0, 0.0);
    for (std::int64_t k = 0; k < n; ++k) {
        const double phase = 2.0 * M_PI * static_cast<double>(dot % n) *
                             static_cast<double>(k) / static_cast<double>(n);
        acc += std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return static_cast<int>(std::lround(acc.real() / static_cast<double>(n)));
}

void write_points_csv(std::ostream& out, const LatticePointSet& points) {
    const int d = points.cfg.d;
    for (int j = 1; j <= d; ++j)
        out << (j > 1 ? ",x" : "x") << j;
    out << "\n";
    char buf[40];
    for (std::int64_t k = 0; k < points.cfg.n; ++k) {
        for (int j = 1; j <= d; ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", points.at(k, j));
            if (j > 1)
                out << ',';
            out << buf;
        }
        out << "\n";
    }
}

} // namespace lf

#include "latticeforge/lattice.hpp"
#include "latticeforge/errors.hpp"

#include <cmath>
#include <string>

namespace lf {

LatticeConfig::LatticeConfig(int m_, int d_) : m(m_), d(d_) {
    if (m < 1 || m > 30)
        throw validation_error("m must lie in [1, 30], got " + std::to_string(m));
    if (d < 1)
        throw validation_error("dimension must be >= 1");
    n = std::int64_t{1} << m;
}

int delta_n(std::int64_t a, std::int64_t n) {
    if (n < 1)
        throw validation_error("delta_n requires n >= 1");
    return a % n == 0 ? 1 : 0;
}

double gamma_of_set(const std::vector<int>& u, const WeightSequence& gamma) {
    double prod = 1.0;
    for (int j : u)
        prod *= gamma(j);
    return prod;
}

double dual_weight(const std::vector<std::int64_t>& ell, double alpha,
                   const WeightSequence& gamma) {
    double prod = 1.0;
    for (std::size_t i = 0; i < ell.size(); ++i) {
        if (ell[i] == 0)
            continue;
        const double a = std::abs(static_cast<double>(ell[i]));
        prod *= gamma(static_cast<int>(i) + 1) * std::pow(a, -alpha);
    }
    return prod;
}

IndexWindow index_window(int j, const LatticeConfig& cfg, const ReductionIndices& w,
                         bool punctured) {
    if (j < 1 || j > cfg.d)
        throw validation_error("index_window coordinate out of range");
    const int e = cfg.m - w(j);
    const std::int64_t half = e > 0 ? (std::int64_t{1} << e) - 1 : 0;
    return IndexWindow{half, punctured};
}

GeneratingVector::GeneratingVector(LatticeConfig cfg, const ReductionIndices& w,
                                   std::vector<std::int64_t> reduced)
    : cfg_(cfg), reduced_(std::move(reduced)) {
    if (static_cast<int>(reduced_.size()) != cfg_.d)
        throw validation_error("generating vector has " + std::to_string(reduced_.size()) +
                               " components, expected " + std::to_string(cfg_.d));
    w_.resize(static_cast<std::size_t>(cfg_.d));
    for (int j = 1; j <= cfg_.d; ++j)
        w_[static_cast<std::size_t>(j - 1)] = w(j);
    d_star_ = w.d_star(cfg_.m, cfg_.d);

    for (int j = 1; j <= cfg_.d; ++j) {
        const std::int64_t z = reduced_[static_cast<std::size_t>(j - 1)];
        if (z % 2 == 0 || z < 1)
            throw validation_error("component z_" + std::to_string(j) + " must be odd and positive");
        if (j <= d_star_) {
            const std::int64_t bound = std::int64_t{1} << (cfg_.m - w_[static_cast<std::size_t>(j - 1)]);
            if (z >= bound)
                throw validation_error("component z_" + std::to_string(j) + " exceeds its search space");
        } else if (z != 1) {
            throw validation_error("components beyond d* must equal 1");
        }
    }

    full_.resize(static_cast<std::size_t>(cfg_.d));
    for (int j = 1; j <= cfg_.d; ++j) {
        const int wj = w_[static_cast<std::size_t>(j - 1)];
        const std::int64_t scaled =
            wj >= cfg_.m ? 0
                         : ((std::int64_t{1} << wj) * reduced_[static_cast<std::size_t>(j - 1)]) % cfg_.n;
        full_[static_cast<std::size_t>(j - 1)] = scaled;
    }
}

} // namespace lf

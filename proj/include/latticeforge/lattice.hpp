#pragma once

#include "latticeforge/reduction.hpp"
#include "latticeforge/weights.hpp"

#include <cstdint>
#include <vector>

namespace lf {

/// N = 2^m points in d dimensions.
struct LatticeConfig {
    int m;
    std::int64_t n;
    int d;

    LatticeConfig(int m_, int d_);
};

/// 1 if a == 0 (mod n), else 0.
int delta_n(std::int64_t a, std::int64_t n);

/// Product of gamma_j over j in u; 1 for the empty set.
double gamma_of_set(const std::vector<int>& u, const WeightSequence& gamma);

/// Summand of the worst-case error over the dual lattice:
/// prod_{j in supp(ell)} gamma_j * |ell_j|^{-alpha}; 1 for ell = 0.
double dual_weight(const std::vector<std::int64_t>& ell, double alpha,
                   const WeightSequence& gamma);

/// Frequency window 0 +- half_width of coordinate j, optionally with 0 removed.
struct IndexWindow {
    std::int64_t half_width;
    bool punctured;

    bool empty() const { return punctured && half_width == 0; }
    bool contains(std::int64_t ell) const {
        if (ell == 0 && punctured)
            return false;
        return ell >= -half_width && ell <= half_width;
    }
};

IndexWindow index_window(int j, const LatticeConfig& cfg, const ReductionIndices& w,
                         bool punctured = false);

/// Generating vector in reduced form: full component j is (2^{w_j} z_j) mod N
/// with odd z_j. Construction validates the parity/range invariants.
class GeneratingVector {
public:
    GeneratingVector(LatticeConfig cfg, const ReductionIndices& w,
                     std::vector<std::int64_t> reduced);

    const LatticeConfig& config() const { return cfg_; }
    int dimension() const { return cfg_.d; }
    std::int64_t points() const { return cfg_.n; }

    std::int64_t reduced(int j) const { return reduced_[static_cast<std::size_t>(j - 1)]; }
    std::int64_t full(int j) const { return full_[static_cast<std::size_t>(j - 1)]; }
    int w(int j) const { return w_[static_cast<std::size_t>(j - 1)]; }

    const std::vector<std::int64_t>& reduced_all() const { return reduced_; }
    const std::vector<std::int64_t>& full_all() const { return full_; }
    const std::vector<int>& w_all() const { return w_; }

    /// Largest active coordinate index, clamped to d.
    int d_star() const { return d_star_; }

private:
    LatticeConfig cfg_;
    std::vector<int> w_;
    std::vector<std::int64_t> reduced_;
    std::vector<std::int64_t> full_;
    int d_star_;
};

} // namespace lf

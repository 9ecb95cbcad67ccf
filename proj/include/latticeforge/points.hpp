#pragma once

#include "latticeforge/lattice.hpp"

#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <vector>

namespace lf {

/// Rank-1 lattice point set: row k holds {k z / N}. x_0 is the origin.
struct LatticePointSet {
    LatticeConfig cfg;
    std::vector<double> coords; // row-major, N rows of d coordinates

    double at(std::int64_t k, int j) const {
        return coords[static_cast<std::size_t>(k * cfg.d + (j - 1))];
    }
    std::span<const double> row(std::int64_t k) const {
        return {coords.data() + k * cfg.d, static_cast<std::size_t>(cfg.d)};
    }
};

/// All N points, coordinates formed as exact integer residues divided by N.
/// Rows are independent; generation runs in parallel.
LatticePointSet generate_points(const GeneratingVector& z);

/// Single-threaded row loop, reference for the parallel generator.
LatticePointSet generate_points_serial(const GeneratingVector& z);

/// Equal-weight average of f over the point set, fixed order, compensated.
double qmc_estimate(const std::function<double(std::span<const double>)>& f,
                    const LatticePointSet& points);

/// Averaged exponential sum (1/N) sum_k e^{2 pi i (l . z) k / N}, rounded to
/// {0,1}. Evaluated literally via complex arithmetic, independently of the
/// congruence shortcut it must agree with.
int character_check(const std::vector<std::int64_t>& ell, const GeneratingVector& z);

/// CSV export: one row per point, d columns, 17 significant digits.
void write_points_csv(std::ostream& out, const LatticePointSet& points);

} // namespace lf

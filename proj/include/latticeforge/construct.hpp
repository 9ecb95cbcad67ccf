#pragma once

#include "latticeforge/lattice.hpp"
#include "latticeforge/logsin.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lf {

/// Running product state of the fast construction. Entry p of u holds, once
/// coordinates 1..s are finalized and whenever the 2-adic valuation of p is
/// below m - w_s,
///
///     u(p) = prod_{j<=s} (1 + gamma_j log(1/sin^2(pi z_j p / 2^{m-w_j})))
///
/// i.e. the stored products the digit-wise quality function multiplies against
/// the candidate factor. Entries of higher valuation are stale by design: the
/// factor they would gain is exactly 1.
class UState {
public:
    UState(int m, const LogSinTable& table);

    /// Installs coordinate 1 (z_1 = 1): u(p) = 1 + gamma_1 log(1/sin^2(pi p/2^m)).
    void init_first(double gamma1, std::uint64_t* ops);

    /// Multiplies the level-v entries by the coordinate-s factor for the
    /// currently accepted bits z_sv. In-place: read and write strides coincide.
    void apply_bit(int v, int w_s, std::int64_t z_sv, double gamma_s, std::uint64_t* ops);

    void mark_coordinate_done() { ++done_; }
    int coordinates_done() const { return done_; }

    double at(std::int64_t p) const { return u_[static_cast<std::size_t>(p)]; }
    int m() const { return table_->m(); }
    const LogSinTable& table() const { return *table_; }

private:
    const LogSinTable* table_;
    std::vector<double> u_;
    int done_ = 0;
};

/// Digit-wise quality function evaluated by direct nested loops over the
/// previously chosen components (no stored products). The independent
/// reference for quality_h_fast.
double quality_h_reference(std::int64_t x, int s, int v,
                           std::span<const std::int64_t> z_prefix,
                           const LatticeConfig& cfg, const ReductionIndices& w,
                           const WeightSequence& gamma);

/// Same value from the stored products in state (coordinates 1..s-1 final).
double quality_h_fast(std::int64_t x, int s, int v, const UState& state,
                      const LatticeConfig& cfg, const ReductionIndices& w,
                      const WeightSequence& gamma);

struct ConstructionResult {
    GeneratingVector vector;
    std::uint64_t op_count = 0;       // inner multiply-accumulates, for scaling checks
    double wall_time_seconds = 0.0;
    std::vector<std::string> bit_choices; // per coordinate, least significant bit first
};

/// Digit-by-digit construction with the quality function evaluated from
/// scratch at every step. Slow; kept as the oracle for the fast path.
ConstructionResult construct_reduced_slow(const LatticeConfig& cfg,
                                          const ReductionIndices& w,
                                          const WeightSequence& gamma);

/// Fast construction maintaining the u vector; bit-identical decisions to the
/// slow reference (both read one shared log-sin table and sum in one order).
ConstructionResult construct_reduced_fast(const LatticeConfig& cfg,
                                          const ReductionIndices& w,
                                          const WeightSequence& gamma);

/// Non-reduced baseline: the reduced construction with all w_j = 0.
ConstructionResult construct_baseline(const LatticeConfig& cfg,
                                      const WeightSequence& gamma);

/// Largest bitwise deviation of state entries from freshly recomputed products
/// for the finalized prefix; 0.0 when the state invariant holds exactly.
double ustate_recompute_deviation(const UState& state,
                                  std::span<const std::int64_t> z_prefix,
                                  const ReductionIndices& w,
                                  const WeightSequence& gamma);

} // namespace lf

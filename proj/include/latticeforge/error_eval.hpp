#pragma once

#include "latticeforge/lattice.hpp"

#include <cstdint>

namespace lf {

enum class ErrorMethod { ClosedForm, TruncatedSeries, BruteForce };

const char* to_string(ErrorMethod m);

struct ErrorReport {
    double value = 0.0;
    ErrorMethod method = ErrorMethod::ClosedForm;
    double tail_bound = 0.0; // rigorous bound on omitted/approximated mass, 0 if exact
};

struct BoundReport {
    double truncation_bound = 0.0;
    double t_gamma_bound = 0.0;
    double h_bound = 0.0;
};

/// Worst-case integration error of the rank-1 rule in the weighted class with
/// smoothness alpha, via the product formula over all N points. Summation is
/// blocked with compensated accumulation in a fixed order, so the result is
/// bit-identical for any worker count.
ErrorReport worst_case_error(const GeneratingVector& z, double alpha,
                             const WeightSequence& gamma);

/// Single straight-line pass over k. Reference implementation for the blocked
/// kernel above, kept for tests and benchmarks.
double wce_product_serial(const GeneratingVector& z, double alpha,
                          const WeightSequence& gamma);

/// Exhaustive dual-lattice enumeration over {-cutoff..cutoff}^d. Guarded:
/// d <= 3 and (2*cutoff+1)^d <= 7e7. tail_bound covers the omitted frequency
/// mass rigorously.
ErrorReport wce_dual_bruteforce(const GeneratingVector& z, double alpha,
                                const WeightSequence& gamma, std::int64_t cutoff);

/// Quality measure T over the truncated windows, by exhaustive enumeration.
/// alpha = 1 gives T_gamma, general alpha the auxiliary T_{alpha,gamma}.
/// Guarded: d <= 3 and m <= 6.
double t_gamma_bruteforce(const GeneratingVector& z, const WeightSequence& gamma,
                          double alpha = 1.0);

/// Same quantity through the character property: exact finite cosine sums over
/// all N points, usable well beyond the enumeration guard. Cross-checked
/// against t_gamma_bruteforce in the test suite.
double t_gamma_character(const GeneratingVector& z, const WeightSequence& gamma,
                         double alpha = 1.0);

/// H quantity of the first s components (prefix of z), the cumulative log-sin
/// objective the digit-wise construction controls. O(s^2 N).
double h_quantity(const GeneratingVector& z, int s, const WeightSequence& gamma);

/// Bound on the frequency-truncation error (product-weight evaluation grouped
/// by the largest index, valid since w is non-decreasing).
double truncation_bound(const LatticeConfig& cfg, const ReductionIndices& w,
                        const WeightSequence& gamma, double alpha);

/// A priori bound on T_gamma for constructed vectors. Proven for m > 3.
double t_gamma_bound(const LatticeConfig& cfg, const ReductionIndices& w,
                     const WeightSequence& gamma);

/// N [ -1 + prod_{j<=s} (1 + gamma_j log 4) ], the a priori bound on the H
/// quantity of constructed vectors.
double h_quantity_bound(const LatticeConfig& cfg, const WeightSequence& gamma, int s);

/// All three a priori bounds in one record, h evaluated at s = d*.
BoundReport compute_bounds(const LatticeConfig& cfg, const ReductionIndices& w,
                           const WeightSequence& gamma, double alpha);

} // namespace lf

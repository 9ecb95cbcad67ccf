#pragma once

#include <cmath>

namespace lf {

/// Compensated accumulator (Neumaier's variant of Kahan summation).
///
/// The accumulation order is part of the contract: summing the same values
/// in the same order yields bit-identical results on every run.
class StableSum {
public:
    StableSum() = default;
    explicit StableSum(double init) : sum_(init) {}

    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

    void reset() {
        sum_ = 0.0;
        comp_ = 0.0;
    }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace lf

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lf {

/// Non-decreasing reduction indices w_j with w_1 = 0. Y_j = 2^{w_j} scales the
/// search space of coordinate j; coordinates with w_j >= m drop out.
///
/// Descriptors: "zero", "log:p" (w_j = floor(p*log2 j)), "explicit:<path>".
class ReductionIndices {
public:
    enum class Kind { Zero, Logarithmic, Explicit };

    static ReductionIndices zero();
    static ReductionIndices logarithmic(double p);
    static ReductionIndices explicit_list(std::vector<int> w);

    static ReductionIndices parse(const std::string& descriptor);
    std::string format() const;

    /// w_j, 1-based.
    int operator()(int j) const;

    /// Largest j <= d with w_j < m. Always >= 1 since w_1 = 0.
    int d_star(int m, int d) const;

    Kind kind() const { return kind_; }

private:
    ReductionIndices() = default;

    Kind kind_ = Kind::Zero;
    double p_ = 0.0;
    // exact rational form of p when recognizable, for boundary-safe floors
    long long p_num_ = 0;
    long long p_den_ = 0; // 0 when no rational form is known
    std::vector<int> values_;
    std::string source_path_;
};

} // namespace lf

#pragma once

#include <string>
#include <vector>

namespace lf {

/// Product weights gamma_j > 0, either parametric or an explicit list, with an
/// optional exponent applied on top: gamma_j = base_j^power.
///
/// Descriptors: "poly:q" (gamma_j = 1/j^q), "geo:c" (gamma_j = c^j with
/// 0 < c < 1), "explicit:<path>" (one positive value per whitespace-separated
/// token), each optionally followed by "^p".
class WeightSequence {
public:
    enum class Kind { Polynomial, Geometric, Explicit };

    static WeightSequence polynomial(double q, double power = 1.0);
    static WeightSequence geometric(double c, double power = 1.0);
    static WeightSequence explicit_list(std::vector<double> values, double power = 1.0);

    static WeightSequence parse(const std::string& descriptor);
    std::string format() const;

    /// gamma_j, 1-based. Throws validation_error if an explicit list does not
    /// cover j.
    double operator()(int j) const;

    /// Same base family with the exponent multiplied by extra (gamma^extra of
    /// this sequence).
    WeightSequence powered(double extra) const;

    Kind kind() const { return kind_; }
    double power() const { return power_; }
    int explicit_size() const { return static_cast<int>(values_.size()); }

private:
    WeightSequence() = default;

    Kind kind_ = Kind::Polynomial;
    double param_ = 1.0;            // q or c
    std::vector<double> values_;    // explicit base values
    std::string source_path_;       // for formatting explicit descriptors
    double power_ = 1.0;
};

} // namespace lf

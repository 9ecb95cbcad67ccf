#pragma once

#include <cstdint>
#include <vector>

namespace lf {

/// Precomputed values log(1/sin^2(pi k / 2^m)) for k = 1..2^m - 1 (entry 0 is
/// unused and never requested). The half-turn symmetry T[N-k] = T[k] is made
/// bit-exact by mirroring, and entry N/2 is exactly zero.
class LogSinTable {
public:
    explicit LogSinTable(int m);

    int m() const { return m_; }
    std::int64_t n() const { return std::int64_t{1} << m_; }

    double operator[](std::int64_t k) const { return vals_[static_cast<std::size_t>(k)]; }

    /// Table index of the argument a / 2^t, i.e. (a * 2^{m-t}) mod 2^m.
    /// Unsigned wraparound keeps the shift exact mod 2^m for any a >= 0.
    std::int64_t index(std::int64_t a, int t) const {
        const auto u = static_cast<std::uint64_t>(a) << (m_ - t);
        return static_cast<std::int64_t>(u & static_cast<std::uint64_t>(n() - 1));
    }

private:
    int m_;
    std::vector<double> vals_;
};

} // namespace lf

#include "latticeforge/logsin.hpp"
#include "latticeforge/errors.hpp"

#include <cmath>

namespace lf {

LogSinTable::LogSinTable(int m) : m_(m) {
    if (m < 1 || m > 30)
        throw validation_error("log-sin table requires m in [1, 30]");
    const std::int64_t n = std::int64_t{1} << m;
    vals_.assign(static_cast<std::size_t>(n), 0.0);
    // evaluate only on [0, 1/2] where sin is well conditioned, mirror the rest
    for (std::int64_t k = 1; k <= n / 2; ++k) {
        const double s = std::sin(M_PI * (static_cast<double>(k) / static_cast<double>(n)));
        const double v = -2.0 * std::log(s);
        vals_[static_cast<std::size_t>(k)] = v;
        vals_[static_cast<std::size_t>(n - k)] = v;
    }
    vals_[static_cast<std::size_t>(n / 2)] = 0.0; // sin(pi/2) = 1 exactly
}

} // namespace lf

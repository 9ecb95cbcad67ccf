#pragma once

#include "latticeforge/construct.hpp"
#include "latticeforge/lattice.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lf {

/// On-disk record of a constructed generating vector (JSON, schema_version 1).
/// wall_time_seconds is the only field expected to differ between otherwise
/// identical runs; determinism comparisons exclude it.
struct VectorFile {
    int schema_version = 1;
    int m = 0;
    std::int64_t n = 0;
    int d = 0;
    std::string weights;   // construction weight descriptor
    std::string reduction; // reduction descriptor
    std::vector<int> w;
    std::vector<std::int64_t> z_reduced;
    std::vector<std::int64_t> z_full;
    std::string method; // "reduced-fast" | "reduced-slow" | "baseline"
    std::uint64_t op_count = 0;
    double wall_time_seconds = 0.0;

    struct StoredError {
        double alpha = 0.0;
        std::string weights; // evaluation weight descriptor
        double value = 0.0;
    };
    std::optional<StoredError> wce;

    static VectorFile from_result(const ConstructionResult& result,
                                  const std::string& weights_descriptor,
                                  const std::string& reduction_descriptor,
                                  const std::string& method);

    /// Rebuilds the validated GeneratingVector (range/parity checks rerun).
    GeneratingVector to_vector() const;

    void save(const std::string& path) const;
    static VectorFile load(const std::string& path);
};

} // namespace lf

#pragma once

#include <stdexcept>
#include <string>

namespace lf {

// Bad user-supplied data (descriptors, files, inconsistent parameters).
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds a documented feasibility guard (oracle sizes, export limits).
class guard_error : public std::runtime_error {
public:
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lf

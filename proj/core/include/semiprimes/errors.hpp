#pragma once

#include <stdexcept>
#include <string>

namespace semiprimes {

// Thrown when a computation would exceed the configured memory/work budget.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a cross-check against an independent oracle disagrees.
struct VerifyError : std::runtime_error {
    explicit VerifyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace semiprimes

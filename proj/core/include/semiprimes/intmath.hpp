#pragma once

#include <cstdint>

namespace semiprimes {

/// floor(sqrt(n)) with integer correction; never trusts the FP floor.
uint64_t isqrt64(uint64_t n);

/// floor(n^(1/k)) such that r^k <= n < (r+1)^k, exact in integer arithmetic.
uint64_t iroot64(uint64_t n, unsigned k);

}  // namespace semiprimes

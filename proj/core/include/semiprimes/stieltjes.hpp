#pragma once

#include <vector>

#include "semiprimes/bigreal.hpp"

namespace semiprimes {

/// Stieltjes constants gamma_0..gamma_N loaded from the embedded 65-digit
/// table (treated as verified input data, usable up to `source_precision`).
struct StieltjesTable {
    std::vector<BigReal> gammas;
    int source_precision = 0;
};

constexpr int kStieltjesSourcePrecision = 60;
constexpr int kStieltjesMaxIndex = 16;

/// Table at the requested working precision. Throws std::invalid_argument for
/// digits beyond the source precision.
StieltjesTable stieltjes_table(int digits);

}  // namespace semiprimes

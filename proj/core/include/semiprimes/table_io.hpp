#pragma once

#include <string>
#include <vector>

#include "semiprimes/asymptotics.hpp"
#include "semiprimes/constants.hpp"

namespace semiprimes {

/// Table formatting: plain decimal for |v| < 10^3 (and |v| >= 10^-4),
/// scientific otherwise, always `sig` significant digits.
std::string format_value(const BigReal& v, int sig = 20);

/// `n,B_n,C_n` rows, values at `sig` significant digits, LF line endings.
std::string constants_csv(const ConstantsTable& table, int sig = 20);
std::string constants_json(const ConstantsTable& table, int sig = 20);

/// `x,n,a_n,pi2,eps_n` rows; parse(emit(rows)) reproduces the rows exactly
/// because a_n/eps_n are serialized with full round-trip precision.
std::string error_table_csv(const std::vector<ErrorTableRow>& rows);
std::string error_table_json(const std::vector<ErrorTableRow>& rows);
std::vector<ErrorTableRow> parse_error_table_csv(const std::string& text, int digits = BigReal::kDefaultDigits);

/// Write via temp file + rename so readers never observe a torn file.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace semiprimes

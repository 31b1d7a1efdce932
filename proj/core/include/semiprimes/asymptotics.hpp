#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "semiprimes/almost_prime.hpp"
#include "semiprimes/bigreal.hpp"
#include "semiprimes/constants.hpp"

namespace semiprimes {

/// One (x, n) record of the error tables behind the paper-style figures.
struct ErrorTableRow {
    uint64_t x = 0;
    int n = 0;
    BigReal a_n;
    uint64_t pi2_exact = 0;
    BigReal eps_n;
};

/// Prime-counting approximant (x/log x) sum_{i<n} i!/(log x)^i.
BigReal alpha_n(const BigReal& x, int n);

/// a_1 = x loglog x / log x; even/odd orders truncate the double series.
BigReal approximant(int n, const BigReal& x, const ConstantsTable& table);

/// x loglog x/log x + 0.265 x/log x - 1.540 x/(log x)^2.
BigReal ishmukhametov_sharifullina(const BigReal& x);

ErrorTableRow make_error_row(int n, uint64_t x, uint64_t pi2, const ConstantsTable& table);
ErrorTableRow relative_error(int n, uint64_t x, const ConstantsTable& table, const SieveConfig& cfg = {});

/// argmin over n in [1, n_max] of eps_n(x); ties break toward smaller n.
int n_min(uint64_t x, int n_max, const ConstantsTable& table, const SieveConfig& cfg = {});

/// S_n(x) = sum_{p<=sqrt x} (1/p)(1 - log p/log x)^{-n}, direct summation.
BigReal s_n_direct(int n, uint64_t x, int digits, const SieveConfig& cfg = {});

/// Companion truncated expansion loglog x + M + q_n + sum_{i<=ell} C(n+i-1,n-1) B_i/(log x)^i.
BigReal s_n_expansion(int n, uint64_t x, int ell, const ConstantsTable& table);

/// Rows for all (x, n), x-major then n-minor; exact pi_2 computed once per x.
/// `threads` > 1 distributes distinct x values over workers; output order is fixed.
std::vector<ErrorTableRow> error_table(std::span<const uint64_t> xs, int n_max, const ConstantsTable& table,
                                       const SieveConfig& cfg = {}, int threads = 1);

}  // namespace semiprimes

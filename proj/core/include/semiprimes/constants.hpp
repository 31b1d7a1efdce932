#pragma once

#include <gmpxx.h>

#include <vector>

#include "semiprimes/bigreal.hpp"
#include "semiprimes/series.hpp"
#include "semiprimes/stieltjes.hpp"

namespace semiprimes {

/// B_n, C_n to >= 20 significant digits plus the exact rational companions
/// q_n and H_n used by the asymptotic machinery.
struct ConstantsTable {
    int digits = BigReal::kDefaultDigits;
    std::vector<BigReal> B;    // 0..n_max
    std::vector<BigReal> C;    // 0..n_max
    std::vector<mpq_class> q;  // 0..n_max+1, q[0] unused (q_1 = 0)
    std::vector<mpq_class> H;  // harmonic numbers H_0..n_max
};

/// Taylor series at s = 1 of zeta'(s)/zeta(s) + 1/(s-1), computed from the
/// Stieltjes series of (s-1)zeta(s) by series derivative/reciprocal/multiply.
TruncatedSeries regularized_logderiv_series(int N, int digits);

/// q_1 = 0; q_n = sum_{i=1}^{n-1} (2^i - 1)/i, exact.
mpq_class q_value(int n);

/// | sum_{i=1}^{terms} C(n+i-1, n-1)/(i 2^i)  -  (q_n + log 2) |
/// with exact integer binomials, accumulated at `digits` precision.
BigReal q_identity_residual(int n, int terms, int digits);

/// Full table for n = 0..n_max. B_0 = C_0 = Meissel--Mertens.
ConstantsTable build_constants(int n_max, int digits);

BigReal compute_B(int n, int digits);
BigReal compute_C(int n, int digits);

}  // namespace semiprimes

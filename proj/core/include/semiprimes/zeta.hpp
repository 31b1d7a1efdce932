#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <vector>

#include "semiprimes/bigreal.hpp"

namespace semiprimes {

/// zeta^{(k)}(s) for k = 0..K at integer s >= 2.
struct ZetaDerivs {
    int s = 0;
    std::vector<BigReal> derivs;
};

/// (zeta'/zeta)^{(k)}(s) for k = 0..K at integer s >= 2.
struct LogDerivDerivs {
    int s = 0;
    std::vector<BigReal> vals;
};

/// Euler--Maclaurin evaluation of zeta and its s-derivatives, all orders at
/// once (the tail is expanded as a truncated series in a shift variable).
/// Truncation point and Bernoulli depth follow the standard remainder bound,
/// pushed below 10^-(digits+10).
ZetaDerivs zeta_derivatives(int s, int K, int digits);

/// Derivatives of zeta'/zeta from the zeta derivatives via the product-rule
/// recurrence zeta^{(k+1)} = sum_j C(k,j) L^{(j)} zeta^{(k-j)}.
LogDerivDerivs logderiv_derivatives(int s, int K, int digits);

/// Moebius function, by trial factorization.
int mobius(uint64_t n);

/// Meissel--Mertens constant M = gamma_0 + sum_{i>=2} mu(i) log(zeta(i)) / i.
BigReal meissel_mertens(int digits);

/// Exact Bernoulli numbers B_0..B_n (B_1 = -1/2 convention).
const std::vector<mpq_class>& bernoulli_numbers(size_t n);

}  // namespace semiprimes

#include <doctest.h>

#include "semiprimes/sieve.hpp"
#include "semiprimes/zeta.hpp"

using namespace semiprimes;

namespace {

constexpr int kDigits = 40;

BigReal tol(int d) { return BigReal(10L, kDigits).pow_si(-d); }

BigReal pi_const(int digits) {
    BigReal r(digits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

}  // namespace

TEST_SUITE("zeta") {

TEST_CASE("zeta(2) and zeta(4) match their closed forms") {
    BigReal pi = pi_const(kDigits);
    BigReal z2 = zeta_derivatives(2, 0, kDigits).derivs[0];
    CHECK((z2 - pi * pi / 6L).abs() < tol(38));
    BigReal z4 = zeta_derivatives(4, 0, kDigits).derivs[0];
    CHECK((z4 - pi.pow_si(4) / 90L).abs() < tol(38));
    CHECK(z2 > BigReal(1L, kDigits));
    CHECK(z4 > BigReal(1L, kDigits));
}

TEST_CASE("zeta derivatives match direct summation at s = 5") {
    // sum_{m<=10^5} (-log m)^k m^-5; tail below 10^-18 at k <= 4
    const int K = 4;
    std::vector<BigReal> direct(K + 1, BigReal(0L, kDigits));
    for (unsigned long m = 1; m <= 100'000; ++m) {
        BigReal bm(m, kDigits);
        BigReal w = bm.pow_si(-5);
        BigReal negl = -bm.log();
        BigReal c = w;
        direct[0] += c;
        for (int k = 1; k <= K; ++k) {
            c = c * negl;
            direct[k] += c;
        }
    }
    ZetaDerivs zd = zeta_derivatives(5, K, kDigits);
    for (int k = 0; k <= K; ++k) {
        CHECK((zd.derivs[k] - direct[k]).abs() < tol(15));
        // sign alternation of zeta^{(k)}(s) for s >= 2
        CHECK(zd.derivs[k].sign() == (k % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("doubling working precision changes no digit at 40") {
    ZetaDerivs a = zeta_derivatives(3, 3, 40);
    ZetaDerivs b = zeta_derivatives(3, 3, 50);
    for (int k = 0; k <= 3; ++k) CHECK((a.derivs[k] - b.derivs[k]).abs() < tol(39));
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(zeta_derivatives(1, 0, 40), std::invalid_argument);
    CHECK_THROWS_AS(zeta_derivatives(0, 0, 40), std::invalid_argument);
    CHECK_THROWS_AS(zeta_derivatives(2, -1, 40), std::invalid_argument);
}

TEST_CASE("logderiv: quotient-rule identities at s = 2") {
    ZetaDerivs zd = zeta_derivatives(2, 2, kDigits);
    LogDerivDerivs ld = logderiv_derivatives(2, 1, kDigits);
    CHECK((ld.vals[0] - zd.derivs[1] / zd.derivs[0]).abs() < tol(35));
    BigReal l0 = zd.derivs[1] / zd.derivs[0];
    CHECK((ld.vals[1] - (zd.derivs[2] / zd.derivs[0] - l0 * l0)).abs() < tol(33));
}

TEST_CASE("logderiv matches the von Mangoldt series at s = 5") {
    // zeta'/zeta(s) = -sum Lambda(n) n^-s, so L^(k)(s) = -sum Lambda(n)(-log n)^k n^-s.
    // At s = 5, truncation at 10^4 leaves a tail below ~10^-12 for k <= 3.
    const int K = 3;
    std::vector<BigReal> direct(K + 1, BigReal(0L, kDigits));
    std::vector<uint64_t> primes = primes_up_to(10'000).primes;
    for (uint64_t p : primes) {
        BigReal logp = BigReal(p, kDigits).log();
        for (uint64_t q = p; q <= 10'000; ) {
            BigReal bq(q, kDigits);
            BigReal w = logp * bq.pow_si(-5);
            BigReal negl = -bq.log();
            BigReal c = w;
            direct[0] -= c;
            for (int k = 1; k <= K; ++k) {
                c = c * negl;
                direct[k] -= c;
            }
            if (q > 10'000 / p) break;
            q *= p;
        }
    }
    LogDerivDerivs ld = logderiv_derivatives(5, K, kDigits);
    for (int k = 0; k <= K; ++k) CHECK((ld.vals[k] - direct[k]).abs() < tol(10));
}

TEST_CASE("mobius") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(2 * 3 * 5 * 7) == 1);
    CHECK_THROWS_AS(mobius(0), std::invalid_argument);
    // squarefree count sanity: sum |mu(n)| for n <= 1000 is 608
    int sf = 0;
    for (uint64_t n = 1; n <= 1000; ++n) sf += mobius(n) != 0;
    CHECK(sf == 608);
}

TEST_CASE("Meissel-Mertens constant") {
    BigReal m = meissel_mertens(40);
    CHECK((m - BigReal::from_string("0.26149721284764278375", kDigits)).abs() < tol(20));
    // gamma_0 term dominates; the Moebius correction is negative
    BigReal gamma0 = BigReal::from_string("0.5772156649015328606", kDigits);
    CHECK(m < gamma0);
    // slow-convergence cross-check from the sieve side
    BigReal finite = mertens_log_sum(1'000'000, 0, 40);
    BigReal loglog = BigReal(1'000'000UL, kDigits).log().log();
    CHECK((finite - loglog - m).abs() < BigReal::from_string("0.01", kDigits));
}

TEST_CASE("Bernoulli numbers are exact rationals") {
    const auto& b = bernoulli_numbers(12);
    CHECK(b[0] == mpq_class(1));
    CHECK(b[1] == mpq_class(-1, 2));
    CHECK(b[2] == mpq_class(1, 6));
    CHECK(b[3] == 0);
    CHECK(b[4] == mpq_class(-1, 30));
    CHECK(b[12] == mpq_class(-691, 2730));
}

}  // TEST_SUITE

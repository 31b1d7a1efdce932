#include "semiprimes/zeta.hpp"

#include <mutex>
#include <stdexcept>

#include "semiprimes/series.hpp"
#include "semiprimes/stieltjes.hpp"

namespace semiprimes {

const std::vector<mpq_class>& bernoulli_numbers(size_t n) {
    static std::vector<mpq_class> cache{mpq_class(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= n) {
        // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
        size_t m = cache.size();
        mpq_class acc(0);
        mpz_class binom;
        for (size_t j = 0; j < m; ++j) {
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m + 1), static_cast<unsigned long>(j));
            acc += mpq_class(binom) * cache[j];
        }
        acc /= static_cast<long>(m + 1);
        cache.push_back(-acc);
    }
    return cache;
}

namespace {

// exp(c * t) as a truncated series of order K
TruncatedSeries exp_series(const BigReal& c, int K, int digits) {
    TruncatedSeries e(K, digits);
    e[0] = BigReal(1L, digits);
    for (int k = 1; k <= K; ++k) e[k] = e[k - 1] * c / static_cast<long>(k);
    return e;
}

}  // namespace

ZetaDerivs zeta_derivatives(int s, int K, int digits) {
    if (s <= 1) throw std::invalid_argument("zeta_derivatives: s >= 2 required (pole at s = 1)");
    if (K < 0) throw std::invalid_argument("zeta_derivatives: K >= 0 required");

    const int work = digits + 12;
    const BigReal tol = BigReal(10L, work).pow_si(-(digits + 10));

    unsigned long N = static_cast<unsigned long>(std::max(24, digits + 8));
    for (int attempt = 0; attempt < 6; ++attempt) {
        // direct part: sum_{m=1}^{N-1} m^{-s} exp(-t log m)
        std::vector<BigReal> direct(static_cast<size_t>(K) + 1, BigReal(0L, work));
        for (unsigned long m = 1; m < N; ++m) {
            BigReal bm(m, work);
            BigReal w = bm.pow_si(-s);
            BigReal negl = -bm.log();
            BigReal c = w;
            direct[0] += c;
            for (int k = 1; k <= K; ++k) {
                c = c * negl / static_cast<long>(k);
                direct[k] += c;
            }
        }

        BigReal bN(N, work);
        BigReal logN = bN.log();
        BigReal Npow = bN.pow_si(-s);  // N^{-s}

        // tail pieces before the common exp(-t log N) factor:
        //   N^{1-s}/(s-1+t) + N^{-s}/2 + Bernoulli corrections
        TruncatedSeries tail(K, work);
        {
            // N^{1-s} * sum_j (-1)^j t^j / (s-1)^{j+1}
            BigReal inv = BigReal(1L, work) / BigReal(static_cast<long>(s - 1), work);
            BigReal c = Npow * bN * inv;
            for (int j = 0; j <= K; ++j) {
                tail[j] += c;
                c = -(c * inv);
            }
            tail[0] += Npow / 2L;
        }

        bool converged = false;
        {
            // P_j(t) = poch(s + t, 2j - 1), grown incrementally
            TruncatedSeries poch(K, work);
            poch[0] = BigReal(static_cast<long>(s), work);
            if (K >= 1) poch[1] = BigReal(1L, work);
            BigReal scale = Npow * bN / (bN * bN);  // N^{-s-1}
            BigReal prev_bound(0L, work);
            for (int j = 1; j <= 240; ++j) {
                const auto& bern = bernoulli_numbers(static_cast<size_t>(2 * j));
                mpz_class fact;
                mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * j));
                BigReal coeff = BigReal(bern[static_cast<size_t>(2 * j)], work) / BigReal(mpq_class(fact), work);
                BigReal c0mag = (coeff * poch[0] * scale).abs();
                if (j > 1 && c0mag > prev_bound && c0mag > tol) break;  // diverging: need larger N
                prev_bound = c0mag;
                for (int k = 0; k <= K; ++k) tail[k] += coeff * scale * poch[k];
                if (c0mag < tol) {
                    converged = true;
                    break;
                }
                // advance: P *= (s + 2j - 1 + t)(s + 2j + t), scale /= N^2
                for (int step = 0; step < 2; ++step) {
                    long a = s + 2 * j - 1 + step;
                    for (int k = K; k >= 0; --k) {
                        BigReal v = poch[k] * a;
                        if (k > 0) v += poch[k - 1];
                        poch[k] = v;
                    }
                }
                scale = scale / (bN * bN);
            }
        }
        if (!converged) {
            N *= 2;
            continue;
        }

        TruncatedSeries expN = exp_series(-logN, K, work);
        TruncatedSeries full = series_mul(tail, expN);
        ZetaDerivs out;
        out.s = s;
        out.derivs.reserve(static_cast<size_t>(K) + 1);
        mpz_class kfact(1);
        for (int k = 0; k <= K; ++k) {
            if (k > 0) kfact *= k;
            BigReal coeff = direct[static_cast<size_t>(k)] + full[k];
            out.derivs.push_back(coeff * BigReal(mpq_class(kfact), work));
        }
        return out;
    }
    throw std::runtime_error("zeta_derivatives: Euler-Maclaurin failed to converge");
}

LogDerivDerivs logderiv_derivatives(int s, int K, int digits) {
    ZetaDerivs zd = zeta_derivatives(s, K + 1, digits);
    const int work = digits + 12;
    LogDerivDerivs out;
    out.s = s;
    out.vals.reserve(static_cast<size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        BigReal acc = zd.derivs[static_cast<size_t>(k) + 1];
        for (int j = 0; j < k; ++j) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
            acc -= BigReal(mpq_class(binom), work) * out.vals[static_cast<size_t>(j)] * zd.derivs[static_cast<size_t>(k - j)];
        }
        out.vals.push_back(acc / zd.derivs[0]);
    }
    return out;
}

int mobius(uint64_t n) {
    if (n == 0) throw std::invalid_argument("mobius: n >= 1 required");
    int factors = 0;
    for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;  // squared factor
            ++factors;
        }
    }
    if (n > 1) ++factors;
    return (factors % 2 == 0) ? 1 : -1;
}

BigReal meissel_mertens(int digits) {
    StieltjesTable st = stieltjes_table(digits);  // rejects digits beyond table support
    const int work = digits + 10;
    BigReal sum = st.gammas[0];
    BigReal tol = BigReal(10L, work).pow_si(-(digits + 5));
    for (int i = 2; i < 4000; ++i) {
        int mu = mobius(static_cast<uint64_t>(i));
        if (mu == 0) continue;
        BigReal z = zeta_derivatives(i, 0, work).derivs[0];
        BigReal term = z.log() / static_cast<long>(i);
        sum += (mu > 0) ? term : -term;
        if (i >= 8 && term.abs() < tol) break;  // terms ~ 2^-i / i, monotone here
    }
    return sum;
}

}  // namespace semiprimes

#include "semiprimes/asymptotics.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "semiprimes/intmath.hpp"

namespace semiprimes {

BigReal alpha_n(const BigReal& x, int n) {
    if (n < 1) throw std::invalid_argument("alpha_n: n >= 1 required");
    if (x <= BigReal(1L, x.digits())) throw std::invalid_argument("alpha_n: x > 1 required");
    BigReal lx = x.log();
    BigReal invl = BigReal(1L, x.digits()) / lx;
    BigReal sum(0L, x.digits());
    BigReal term(1L, x.digits());  // i!/(log x)^i
    for (int i = 0; i < n; ++i) {
        if (i > 0) term = term * static_cast<long>(i) * invl;
        sum += term;
    }
    return x * invl * sum;
}

BigReal approximant(int n, const BigReal& x, const ConstantsTable& table) {
    if (n < 1) throw std::invalid_argument("approximant: n >= 1 required");
    int digits = std::max(x.digits(), table.digits);
    if (x < BigReal(3L, digits)) throw std::invalid_argument("approximant: x >= 3 required (loglog domain)");
    BigReal lx = x.log();
    BigReal llx = lx.log();
    BigReal invl = BigReal(1L, digits) / lx;

    int ell = n / 2;            // terms of the C-sum
    int mell = (n + 1) / 2;     // terms of the loglog-sum
    if (ell > static_cast<int>(table.C.size())) {
        throw std::invalid_argument("approximant: constants table too short for requested n");
    }
    BigReal sum(0L, digits);
    BigReal pw = invl;          // 1/(log x)^i
    BigReal fact(1L, digits);   // (i-1)!
    for (int i = 1; i <= mell; ++i) {
        if (i > 1) fact = fact * static_cast<long>(i - 1);
        sum += fact * x * llx * pw;
        if (i <= ell) sum += table.C[static_cast<size_t>(i - 1)] * x * pw;
        pw = pw * invl;
    }
    return sum;
}

BigReal ishmukhametov_sharifullina(const BigReal& x) {
    int digits = x.digits();
    if (x <= BigReal(1L, digits).exp()) throw std::invalid_argument("ishmukhametov_sharifullina: x > e required");
    BigReal lx = x.log();
    BigReal llx = lx.log();
    BigReal c1 = BigReal::from_string("0.265", digits);
    BigReal c2 = BigReal::from_string("1.540", digits);
    return x * llx / lx + c1 * x / lx - c2 * x / (lx * lx);
}

ErrorTableRow make_error_row(int n, uint64_t x, uint64_t pi2, const ConstantsTable& table) {
    if (x < 4) throw std::invalid_argument("relative_error: x >= 4 required");
    ErrorTableRow row;
    row.x = x;
    row.n = n;
    row.pi2_exact = pi2;
    BigReal bx(static_cast<unsigned long>(x), table.digits);
    row.a_n = approximant(n, bx, table);
    BigReal bpi2(static_cast<unsigned long>(pi2), table.digits);
    row.eps_n = (row.a_n - bpi2).abs() / bpi2;
    return row;
}

ErrorTableRow relative_error(int n, uint64_t x, const ConstantsTable& table, const SieveConfig& cfg) {
    return make_error_row(n, x, semiprime_pi(x, cfg), table);
}

int n_min(uint64_t x, int n_max, const ConstantsTable& table, const SieveConfig& cfg) {
    if (n_max < 2) throw std::invalid_argument("n_min: n_max >= 2 required");
    uint64_t pi2 = semiprime_pi(x, cfg);
    int best = 1;
    BigReal best_eps = make_error_row(1, x, pi2, table).eps_n;
    for (int n = 2; n <= n_max; ++n) {
        BigReal eps = make_error_row(n, x, pi2, table).eps_n;
        if (eps < best_eps) {  // strict: ties keep the smaller n
            best = n;
            best_eps = eps;
        }
    }
    return best;
}

BigReal s_n_direct(int n, uint64_t x, int digits, const SieveConfig& cfg) {
    if (n < 1 || x < 4) throw std::invalid_argument("s_n_direct: n >= 1, x >= 4 required");
    BigReal lx = BigReal(static_cast<unsigned long>(x), digits).log();
    BigReal one(1L, digits);
    BigReal sum(0L, digits);
    for_each_prime(isqrt64(x), [&](uint64_t p) {
        BigReal bp(static_cast<unsigned long>(p), digits);
        BigReal factor = (one - bp.log() / lx).pow_si(-n);
        sum += factor / bp;
    }, cfg);
    return sum;
}

BigReal s_n_expansion(int n, uint64_t x, int ell, const ConstantsTable& table) {
    if (n < 1 || x < 4) throw std::invalid_argument("s_n_expansion: n >= 1, x >= 4 required");
    if (ell >= static_cast<int>(table.B.size())) {
        throw std::invalid_argument("s_n_expansion: constants table too short for requested ell");
    }
    int digits = table.digits;
    BigReal lx = BigReal(static_cast<unsigned long>(x), digits).log();
    BigReal sum = lx.log() + table.B[0] + BigReal(q_value(n), digits);
    BigReal pw(1L, digits);
    for (int i = 1; i <= ell; ++i) {
        pw = pw / lx;
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n + i - 1), static_cast<unsigned long>(n - 1));
        sum += BigReal(mpq_class(binom), digits) * table.B[static_cast<size_t>(i)] * pw;
    }
    return sum;
}

std::vector<ErrorTableRow> error_table(std::span<const uint64_t> xs, int n_max, const ConstantsTable& table,
                                       const SieveConfig& cfg, int threads) {
    if (xs.empty()) throw std::invalid_argument("error_table: xs nonempty required");
    std::vector<uint64_t> sorted(xs.begin(), xs.end());
    std::sort(sorted.begin(), sorted.end());

    std::vector<uint64_t> pi2(sorted.size(), 0);
    if (threads <= 1 || sorted.size() == 1) {
        for (size_t i = 0; i < sorted.size(); ++i) pi2[i] = semiprime_pi(sorted[i], cfg);
    } else {
        size_t nw = std::min<size_t>(static_cast<size_t>(threads), sorted.size());
        std::vector<std::thread> workers;
        std::atomic<size_t> next{0};
        for (size_t w = 0; w < nw; ++w) {
            workers.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < sorted.size(); i = next.fetch_add(1)) {
                    pi2[i] = semiprime_pi(sorted[i], cfg);
                }
            });
        }
        for (auto& t : workers) t.join();
    }

    std::vector<ErrorTableRow> rows;
    rows.reserve(sorted.size() * static_cast<size_t>(n_max));
    for (size_t i = 0; i < sorted.size(); ++i) {
        for (int n = 1; n <= n_max; ++n) rows.push_back(make_error_row(n, sorted[i], pi2[i], table));
    }
    return rows;
}

}  // namespace semiprimes

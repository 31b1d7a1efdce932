#include "semiprimes/almost_prime.hpp"

#include <algorithm>
#include <stdexcept>

#include "semiprimes/intmath.hpp"

namespace semiprimes {

uint64_t semiprime_pi(uint64_t x, const SieveConfig& cfg) {
    if (x < 4) return 0;
    uint64_t r = isqrt64(x);
    PrimeTable pt = primes_up_to(r, cfg);
    uint64_t pr = pt.primes.size();  // pi(sqrt x)

    std::vector<uint64_t> queries(pt.primes.size());
    for (size_t i = 0; i < pt.primes.size(); ++i) {
        queries[i] = x / pt.primes[pt.primes.size() - 1 - i];  // ascending since p descends
    }
    std::vector<uint64_t> pis = prime_pi_batch(queries, cfg);

    uint64_t sum = 0;
    for (uint64_t v : pis) sum += v;
    // (pi(r) - pi(r)^2)/2 is negative for r >= 2; keep everything in unsigned-safe order
    uint64_t tri = pr * (pr - 1) / 2;
    return sum - tri;
}

AlmostPrimeCounter::AlmostPrimeCounter(uint64_t limit, const SieveConfig& cfg) : limit_(limit) {
    if (limit + 1 > cfg.memory_budget / sizeof(uint32_t)) {
        throw ResourceError("AlmostPrimeCounter: pi lookup table exceeds memory budget");
    }
    pi_.assign(limit + 1, 0);
    for_each_prime(limit, [&](uint64_t p) { pi_[p] = 1; }, cfg);
    uint32_t run = 0;
    for (uint64_t v = 0; v <= limit; ++v) {
        run += pi_[v];
        pi_[v] = run;
    }
    primes_ = primes_up_to(isqrt64(limit), cfg).primes;
}

uint64_t AlmostPrimeCounter::count(unsigned k, uint64_t x) const {
    if (x > limit_) throw std::invalid_argument("AlmostPrimeCounter: x beyond table limit");
    if (k == 0) return x >= 1 ? 1 : 0;
    if (k == 1) return pi_[x];
    return dfs(k, x);
}

uint64_t AlmostPrimeCounter::dfs(unsigned k, uint64_t x) const {
    uint64_t key = (static_cast<uint64_t>(k) << 56) | x;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    uint64_t root = iroot64(x, k);
    // signed accumulation: the inclusion-exclusion terms alternate
    int64_t total = 0;

    auto term_count = [&](unsigned depth, uint64_t rem) -> uint64_t {
        unsigned j = k - depth;  // pi_j(rem)
        if (j == 0) return rem >= 1 ? 1 : 0;
        if (j == 1) return pi_[rem];
        return dfs(j, rem);
    };

    // recursive lambda over prime index
    auto rec = [&](auto&& self, size_t start, unsigned depth, uint64_t rem) -> void {
        for (size_t i = start; i < primes_.size(); ++i) {
            uint64_t p = primes_[i];
            if (p > root) break;
            if (p > rem) break;  // pruning: partial product would exceed x
            uint64_t nrem = rem / p;
            unsigned nd = depth + 1;
            int64_t sign = (nd % 2 == 1) ? 1 : -1;
            total += sign * static_cast<int64_t>(term_count(nd, nrem));
            if (nd < k) self(self, i + 1, nd, nrem);
        }
    };
    rec(rec, 0, 0, x);

    uint64_t result = static_cast<uint64_t>(total);
    memo_.emplace(key, result);
    return result;
}

uint64_t almost_prime_pi(unsigned k, uint64_t x, const SieveConfig& cfg) {
    if (k == 0) return x >= 1 ? 1 : 0;
    if (k == 1) return prime_pi(x, cfg);
    if (k == 2) return semiprime_pi(x, cfg);
    AlmostPrimeCounter counter(x, cfg);
    return counter.count(k, x);
}

OmegaOracle::OmegaOracle(uint64_t limit) {
    omega_.assign(limit + 1, 0);
    // add 1 for every prime power q = p^e dividing m: Omega(m) = sum over such q
    std::vector<uint64_t> primes = primes_up_to(limit, {}).primes;
    for (uint64_t p : primes) {
        for (uint64_t q = p; q <= limit; ) {
            for (uint64_t m = q; m <= limit; m += q) ++omega_[m];
            if (q > limit / p) break;
            q *= p;
        }
    }
}

uint64_t OmegaOracle::count(unsigned k, uint64_t x) const {
    if (x >= omega_.size()) throw std::invalid_argument("OmegaOracle: x beyond sieve limit");
    uint64_t c = 0;
    for (uint64_t m = 1; m <= x; ++m) c += (omega_[m] == k);
    return c;
}

uint64_t omega_count_oracle(unsigned k, uint64_t x) {
    if (x > kOmegaOracleLimit) throw ResourceError("omega_count_oracle: x above oracle limit 10^7");
    OmegaOracle oracle(x);
    return oracle.count(k, x);
}

}  // namespace semiprimes

#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "semiprimes/sieve.hpp"

namespace semiprimes {

/// pi_2(x): semiprimes <= x, by the counting identity
///   (pi(sqrt x) - pi(sqrt x)^2)/2 + sum_{p <= sqrt x} pi(x/p)
/// with pi evaluated through one batched sieve sweep.
uint64_t semiprime_pi(uint64_t x, const SieveConfig& cfg = {});

/// k-almost-prime counter over a fixed range [0, limit]. Builds a flat
/// pi lookup table once, then evaluates the inclusion-exclusion recursion
///   pi_k(x) = sum_{i=1..k} (-1)^(i-1) sum_{p1<...<pi <= x^(1/k)} pi_{k-i}(x / prod)
/// with pi_0 == 1 and memoized pi_j per distinct argument.
class AlmostPrimeCounter {
public:
    explicit AlmostPrimeCounter(uint64_t limit, const SieveConfig& cfg = {});

    uint64_t limit() const { return limit_; }
    uint64_t count(unsigned k, uint64_t x) const;

private:
    uint64_t dfs(unsigned k, uint64_t x) const;

    uint64_t limit_;
    std::vector<uint32_t> pi_;        // pi_[v] = pi(v), v <= limit
    std::vector<uint64_t> primes_;
    mutable std::unordered_map<uint64_t, uint64_t> memo_;
};

/// pi_k(x). k = 1 and k = 2 use the dedicated paths; k >= 3 builds a counter
/// (guarded by `cfg.memory_budget` -- the lookup table is 4 bytes per value).
uint64_t almost_prime_pi(unsigned k, uint64_t x, const SieveConfig& cfg = {});

/// Independent oracle: Omega(m) for all m <= limit via a prime-power sieve,
/// entirely separate from the counting-formula code path.
class OmegaOracle {
public:
    explicit OmegaOracle(uint64_t limit);

    uint64_t limit() const { return static_cast<uint64_t>(omega_.size()) - 1; }
    const std::vector<uint8_t>& values() const { return omega_; }  // omega_[m] = Omega(m)
    uint64_t count(unsigned k, uint64_t x) const;                  // #{m <= x : Omega(m) = k}

private:
    std::vector<uint8_t> omega_;
};

constexpr uint64_t kOmegaOracleLimit = 10'000'000;

/// One-shot oracle call; refuses x > 10^7 (SPF-style sieve memory is linear in x).
uint64_t omega_count_oracle(unsigned k, uint64_t x);

}  // namespace semiprimes

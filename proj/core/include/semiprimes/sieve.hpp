#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semiprimes/bigreal.hpp"
#include "semiprimes/errors.hpp"

namespace semiprimes {

struct SieveConfig {
    uint64_t segment_size = 1u << 20;          // odd-number entries per segment
    uint64_t memory_budget = 2ull << 30;       // bytes
    bool allow_segmentation = true;

    void validate() const;
};

/// All primes <= limit, ascending.
struct PrimeTable {
    uint64_t limit = 0;
    std::vector<uint64_t> primes;

    // number of primes <= x (x <= limit), by binary search
    uint64_t count_leq(uint64_t x) const;
};

PrimeTable primes_up_to(uint64_t limit, const SieveConfig& cfg = {});

/// pi(x) via the segmented sieve.
uint64_t prime_pi(uint64_t x, const SieveConfig& cfg = {});

/// Batched pi at ascending query points: one monotone sweep over segments.
/// Throws std::invalid_argument on unsorted input.
std::vector<uint64_t> prime_pi_batch(std::span<const uint64_t> queries, const SieveConfig& cfg = {});

/// Visit every prime <= limit in ascending order.
void for_each_prime(uint64_t limit, const std::function<void(uint64_t)>& fn, const SieveConfig& cfg = {});

/// sum_{p <= x} (log p)^i / p, accumulated ascending at `digits` precision.
BigReal mertens_log_sum(uint64_t x, int i, int digits, const SieveConfig& cfg = {});

/// Binary prime cache (magic + version + limit + count + primes, little endian).
/// Cache reuse is bit-identical to recomputation.
void write_prime_cache(const PrimeTable& table, const std::string& path);
std::optional<PrimeTable> read_prime_cache(const std::string& path);

}  // namespace semiprimes

#include "semiprimes/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <stdexcept>

#include "semiprimes/intmath.hpp"

namespace semiprimes {

uint64_t isqrt64(uint64_t n) {
    if (n == 0) return 0;
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;                          // r*r may overflow; use division
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

uint64_t iroot64(uint64_t n, unsigned k) {
    if (k == 0) throw std::invalid_argument("iroot64: k == 0");
    if (k == 1) return n;
    if (k == 2) return isqrt64(n);
    if (n == 0) return 0;
    uint64_t r = static_cast<uint64_t>(std::pow(static_cast<double>(n), 1.0 / k));
    auto pow_leq = [n](uint64_t b, unsigned e) {  // b^e <= n without overflow
        uint64_t acc = 1;
        for (unsigned i = 0; i < e; ++i) {
            if (b != 0 && acc > n / b) return false;
            acc *= b;
        }
        return acc <= n;
    };
    while (r > 1 && !pow_leq(r, k)) --r;
    while (pow_leq(r + 1, k)) ++r;
    return r;
}

void SieveConfig::validate() const {
    if (segment_size < (1u << 10)) throw std::invalid_argument("SieveConfig: segment_size < 2^10");
    if (segment_size > memory_budget) throw std::invalid_argument("SieveConfig: segment_size > memory_budget");
}

uint64_t PrimeTable::count_leq(uint64_t x) const {
    auto it = std::upper_bound(primes.begin(), primes.end(), x);
    return static_cast<uint64_t>(it - primes.begin());
}

namespace {

// simple odd-only sieve; the "second, independent path" used for base primes
std::vector<uint64_t> simple_primes(uint64_t limit) {
    std::vector<uint64_t> out;
    if (limit < 2) return out;
    out.push_back(2);
    if (limit < 3) return out;
    uint64_t n = (limit - 1) / 2;  // odd values 3,5,...  index j <-> 2j+3
    std::vector<uint64_t> bits((n + 63) / 64, 0);
    uint64_t r = isqrt64(limit);
    for (uint64_t v = 3; v <= r; v += 2) {
        uint64_t j = (v - 3) / 2;
        if (bits[j >> 6] & (1ull << (j & 63))) continue;
        for (uint64_t m = v * v; m <= limit; m += 2 * v) {
            uint64_t mj = (m - 3) / 2;
            bits[mj >> 6] |= 1ull << (mj & 63);
        }
    }
    for (uint64_t j = 0; j < n; ++j) {
        if (!(bits[j >> 6] & (1ull << (j & 63)))) out.push_back(2 * j + 3);
    }
    return out;
}

// Segmented sweep over odd values 3..limit. visit(base, words, n_entries):
// entry j covers value base + 2j; set bit = composite.
template <class F>
void segment_sweep(uint64_t limit, const SieveConfig& cfg, F&& visit) {
    cfg.validate();
    if (limit < 3) return;
    std::vector<uint64_t> base = simple_primes(isqrt64(limit));
    const uint64_t entries = cfg.segment_size;
    std::vector<uint64_t> words((entries + 63) / 64);
    std::vector<uint64_t> next(base.size(), 0);  // next odd multiple value, per base prime
    size_t active = 0;                           // primes with p*p <= current hi (prefix of base)

    for (uint64_t lo = 3; lo <= limit; lo += 2 * entries) {
        uint64_t hi = std::min(limit, lo + 2 * (entries - 1));
        size_t n = static_cast<size_t>((hi - lo) / 2 + 1);
        std::fill(words.begin(), words.end(), 0);

        while (active < base.size() && base[active] * base[active] <= hi) {
            next[active] = base[active] * base[active];
            ++active;
        }
        // base[0] == 2: skip it (odd-only storage)
        for (size_t i = 0; i < active; ++i) {
            uint64_t p = base[i];
            if (p == 2) continue;
            uint64_t m = next[i];
            if (m < lo) {  // advance to first odd multiple >= lo
                uint64_t q = (lo + p - 1) / p;
                if ((q & 1) == 0) ++q;
                m = q * p;
            }
            for (; m <= hi; m += 2 * p) {
                uint64_t j = (m - lo) / 2;
                words[j >> 6] |= 1ull << (j & 63);
            }
            next[i] = m;
        }
        visit(lo, words, n);
    }
}

// primes (unset bits) among entries [0, j] of the segment
uint64_t count_unset_prefix(const std::vector<uint64_t>& words, uint64_t j) {
    uint64_t total = 0;
    uint64_t full = j / 64;
    for (uint64_t w = 0; w < full; ++w) total += static_cast<uint64_t>(std::popcount(words[w]));
    uint64_t rem = j % 64;
    uint64_t mask = (rem == 63) ? ~0ull : ((1ull << (rem + 1)) - 1);
    total += static_cast<uint64_t>(std::popcount(words[full] & mask));
    return (j + 1) - total;
}

uint64_t count_unset(const std::vector<uint64_t>& words, uint64_t n) {
    return n == 0 ? 0 : count_unset_prefix(words, n - 1);
}

}  // namespace

PrimeTable primes_up_to(uint64_t limit, const SieveConfig& cfg) {
    cfg.validate();
    // the table itself is the dominant allocation; refuse it up front
    double est = limit < 17 ? 8.0 : 1.2 * static_cast<double>(limit) / (std::log(static_cast<double>(limit)) - 1.1);
    if (est * sizeof(uint64_t) > static_cast<double>(cfg.memory_budget)) {
        throw ResourceError("primes_up_to: estimated prime table exceeds memory budget");
    }
    if (!cfg.allow_segmentation) {
        // flat odd bitmap must fit the budget as well
        if (limit / 16 > cfg.memory_budget) {
            throw ResourceError("primes_up_to: flat sieve exceeds memory budget and segmentation is disabled");
        }
        PrimeTable t;
        t.limit = limit;
        t.primes = simple_primes(limit);
        return t;
    }
    PrimeTable t;
    t.limit = limit;
    if (limit >= 2) t.primes.push_back(2);
    segment_sweep(limit, cfg, [&](uint64_t lo, const std::vector<uint64_t>& words, size_t n) {
        for (size_t j = 0; j < n; ++j) {
            if (!(words[j >> 6] & (1ull << (j & 63)))) t.primes.push_back(lo + 2 * j);
        }
    });
    return t;
}

std::vector<uint64_t> prime_pi_batch(std::span<const uint64_t> queries, const SieveConfig& cfg) {
    cfg.validate();
    for (size_t i = 1; i < queries.size(); ++i) {
        if (queries[i] < queries[i - 1]) throw std::invalid_argument("prime_pi_batch: queries not ascending");
    }
    std::vector<uint64_t> out(queries.size(), 0);
    if (queries.empty()) return out;

    size_t qi = 0;
    while (qi < queries.size() && queries[qi] < 3) {
        out[qi] = queries[qi] >= 2 ? 1 : 0;
        ++qi;
    }
    uint64_t cum = 1;  // prime 2
    segment_sweep(queries.back(), cfg, [&](uint64_t lo, const std::vector<uint64_t>& words, size_t n) {
        uint64_t hi = lo + 2 * (n - 1);
        while (qi < queries.size() && queries[qi] <= hi) {
            uint64_t q = queries[qi];
            uint64_t qo = (q & 1) ? q : q - 1;  // floor to odd
            out[qi] = (qo < lo) ? cum : cum + count_unset_prefix(words, (qo - lo) / 2);
            ++qi;
        }
        cum += count_unset(words, n);
    });
    // queries past the last odd entry (even maxima); all remaining are >= 3
    while (qi < queries.size()) out[qi++] = cum;
    return out;
}

uint64_t prime_pi(uint64_t x, const SieveConfig& cfg) {
    uint64_t q[1] = {x};
    return prime_pi_batch(q, cfg)[0];
}

void for_each_prime(uint64_t limit, const std::function<void(uint64_t)>& fn, const SieveConfig& cfg) {
    if (limit >= 2) fn(2);
    segment_sweep(limit, cfg, [&](uint64_t lo, const std::vector<uint64_t>& words, size_t n) {
        for (size_t j = 0; j < n; ++j) {
            if (!(words[j >> 6] & (1ull << (j & 63)))) fn(lo + 2 * j);
        }
    });
}

BigReal mertens_log_sum(uint64_t x, int i, int digits, const SieveConfig& cfg) {
    if (x < 2) throw std::invalid_argument("mertens_log_sum: x >= 2 required");
    if (i < 0) throw std::invalid_argument("mertens_log_sum: i >= 0 required");
    BigReal sum(0L, digits);
    for_each_prime(x, [&](uint64_t p) {
        BigReal bp(static_cast<unsigned long>(p), digits);
        if (i == 0) {
            sum += BigReal(1L, digits) / bp;
        } else {
            sum += bp.log().pow_si(i) / bp;
        }
    }, cfg);
    return sum;
}

namespace {
constexpr char kCacheMagic[4] = {'S', 'P', 'P', 'C'};
constexpr uint8_t kCacheVersion = 1;
}  // namespace

void write_prime_cache(const PrimeTable& table, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw std::runtime_error("write_prime_cache: cannot open " + path);
    std::fwrite(kCacheMagic, 1, 4, f);
    std::fwrite(&kCacheVersion, 1, 1, f);
    uint64_t limit = table.limit;
    uint64_t count = table.primes.size();
    std::fwrite(&limit, sizeof(limit), 1, f);
    std::fwrite(&count, sizeof(count), 1, f);
    if (count) std::fwrite(table.primes.data(), sizeof(uint64_t), count, f);
    std::fclose(f);
}

std::optional<PrimeTable> read_prime_cache(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return std::nullopt;
    char magic[4];
    uint8_t version = 0;
    PrimeTable t;
    uint64_t count = 0;
    bool ok = std::fread(magic, 1, 4, f) == 4 && std::memcmp(magic, kCacheMagic, 4) == 0 &&
              std::fread(&version, 1, 1, f) == 1 && version == kCacheVersion &&
              std::fread(&t.limit, sizeof(t.limit), 1, f) == 1 &&
              std::fread(&count, sizeof(count), 1, f) == 1;
    if (ok) {
        t.primes.resize(count);
        ok = count == 0 || std::fread(t.primes.data(), sizeof(uint64_t), count, f) == count;
    }
    std::fclose(f);
    if (!ok) return std::nullopt;
    return t;
}

}  // namespace semiprimes

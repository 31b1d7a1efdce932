#include <benchmark/benchmark.h>

#include "semiprimes/almost_prime.hpp"
#include "semiprimes/constants.hpp"
#include "semiprimes/sieve.hpp"

namespace {

void BM_prime_pi(benchmark::State& state) {
    uint64_t x = static_cast<uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(semiprimes::prime_pi(x));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * static_cast<int64_t>(x));
}
BENCHMARK(BM_prime_pi)->Arg(1'000'000)->Arg(100'000'000)->Unit(benchmark::kMillisecond);

void BM_semiprime_pi(benchmark::State& state) {
    uint64_t x = static_cast<uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(semiprimes::semiprime_pi(x));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * static_cast<int64_t>(x));
}
BENCHMARK(BM_semiprime_pi)->Arg(1'000'000)->Arg(100'000'000)->Unit(benchmark::kMillisecond);

void BM_almost_prime_pi(benchmark::State& state) {
    unsigned k = static_cast<unsigned>(state.range(0));
    uint64_t x = static_cast<uint64_t>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(semiprimes::almost_prime_pi(k, x));
    }
}
BENCHMARK(BM_almost_prime_pi)->Args({3, 1'000'000})->Args({5, 1'000'000})->Unit(benchmark::kMillisecond);

void BM_build_constants(benchmark::State& state) {
    int digits = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(semiprimes::build_constants(10, digits));
    }
}
BENCHMARK(BM_build_constants)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

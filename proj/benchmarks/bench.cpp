#include "ramp/codes.hpp"
#include "ramp/oracle.hpp"
#include "ramp/schemes.hpp"

#include <benchmark/benchmark.h>

using namespace ramp;

namespace {

void BM_log_binomial_tail(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_binomial_tail(n, n / 100 + 1, 2e-4));
    }
}
BENCHMARK(BM_log_binomial_tail)->Arg(2312)->Arg(65536);

void BM_bch_code(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(bch_code(2048, 22));
    }
}
BENCHMARK(BM_bch_code);

void BM_analyze(benchmark::State& state) {
    MemoryConfig cfg;
    const CodeSpec code = bch_code(2048, 22);
    const Scheme scheme = Scheme::primary_backup(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze(code, cfg, scheme));
    }
}
BENCHMARK(BM_analyze);

void BM_optimize(benchmark::State& state) {
    MemoryConfig cfg;
    const LogProb target =
        analyze(bch_code(2048, 22), cfg, Scheme::baseline()).p_lb_due;
    const Scheme scheme = Scheme::primary_backup(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize(cfg, scheme, target, std::nullopt));
    }
}
BENCHMARK(BM_optimize);

void BM_enumerate_scheme(benchmark::State& state) {
    const Scheme scheme =
        Scheme::erasure_code(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_scheme(1e-3, 1e-6, scheme));
    }
}
// Exact rational enumeration cost grows as 3^N with wide (multi-hundred-bit)
// rationals; N=8 is already ~10^4 outcome vectors.
BENCHMARK(BM_enumerate_scheme)->Arg(5)->Arg(8);

void BM_montecarlo_scheme(benchmark::State& state) {
    const std::uint64_t trials = static_cast<std::uint64_t>(state.range(0));
    const Scheme scheme = Scheme::primary_backup(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(montecarlo_scheme(0.1, 0.01, scheme, trials,
                                                   42, 1e-3, 0.11));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(trials) *
                            state.iterations());
}
BENCHMARK(BM_montecarlo_scheme)->Arg(10000)->Arg(100000);

void BM_montecarlo_bits(benchmark::State& state) {
    const CodeSpec code = bch_code(2048, 22);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            montecarlo_bits(code, 0.01, 10000, 42, 0.0, 0.0, 1e18));
    }
}
BENCHMARK(BM_montecarlo_bits);

} // namespace

BENCHMARK_MAIN();

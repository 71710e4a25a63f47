// Microbenchmarks for the counting-sum hot paths and the QM reference.

#include <benchmark/benchmark.h>

#include "spinseq/spinseq.hpp"

using namespace spinseq;

namespace {

void BM_epsilon_cardinality(benchmark::State& state) {
    exact::prewarm(100);
    const Base8Counts counts{10, 15, 12, 13, 14, 11, 12, 13};
    for (auto _ : state) {
        benchmark::DoNotOptimize(epsilon_cardinality(counts, Side::a1));
    }
}
BENCHMARK(BM_epsilon_cardinality);

void BM_upsilon_plain(benchmark::State& state) {
    exact::prewarm(100);
    for (auto _ : state) {
        benchmark::DoNotOptimize(upsilon(100, 1, 1, 1, 49, -1, 37, Mode::plain));
    }
}
BENCHMARK(BM_upsilon_plain);

void BM_upsilon_interference(benchmark::State& state) {
    exact::prewarm(100);
    for (auto _ : state) {
        benchmark::DoNotOptimize(upsilon(100, 50, 0, 0, 0, 0, 38, Mode::interference));
    }
}
BENCHMARK(BM_upsilon_interference);

void BM_probability_table(benchmark::State& state) {
    exact::prewarm(100);
    const int two_j = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(probability({100, two_j, two_j, 37, {}, {}}));
    }
}
BENCHMARK(BM_probability_table)->Arg(1)->Arg(2)->Arg(8);

void BM_probability_bs(benchmark::State& state) {
    exact::prewarm(100);
    for (auto _ : state) {
        benchmark::DoNotOptimize(probability_bs({100, 2, 0, 56, {}, {}}));
    }
}
BENCHMARK(BM_probability_bs);

void BM_wigner_d_squared(benchmark::State& state) {
    const int two_j = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(wigner_d_squared({two_j, two_j, 0, 1.1}));
    }
}
BENCHMARK(BM_wigner_d_squared)->Arg(2)->Arg(8)->Arg(16);

void BM_brute_force_cells(benchmark::State& state) {
    const auto events = enumerate_event_sequences(6, 2, 2, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_cells(6, Side::a1, events.front(), 3));
    }
}
BENCHMARK(BM_brute_force_cells);

}  // namespace

BENCHMARK_MAIN();

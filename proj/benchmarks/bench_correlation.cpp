#include <benchmark/benchmark.h>

#include <random>

#include "pgolay/correlation.hpp"
#include "pgolay/core.hpp"

using namespace pgolay;

namespace {

BinarySequence make_sequence(int v) {
    std::mt19937 rng(12345u + static_cast<unsigned>(v));
    std::vector<int> entries(static_cast<std::size_t>(v));
    for (int& e : entries) {
        e = rng() % 2 ? 1 : -1;
    }
    return BinarySequence(std::move(entries));
}

void BM_paf(benchmark::State& state) {
    const BinarySequence a = make_sequence(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(paf(a));
    }
}

void BM_naf(benchmark::State& state) {
    const BinarySequence a = make_sequence(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(naf(a));
    }
}

void BM_psd(benchmark::State& state) {
    const BinarySequence a = make_sequence(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(psd(a));
    }
}

void BM_psd_test(benchmark::State& state) {
    const BinarySequence a = make_sequence(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(psd_test(a));
    }
}

}  // namespace

BENCHMARK(BM_paf)->Arg(74)->Arg(202)->Arg(226);
BENCHMARK(BM_naf)->Arg(74)->Arg(202)->Arg(226);
BENCHMARK(BM_psd)->Arg(74)->Arg(202)->Arg(226);
BENCHMARK(BM_psd_test)->Arg(74)->Arg(202)->Arg(226);

BENCHMARK_MAIN();

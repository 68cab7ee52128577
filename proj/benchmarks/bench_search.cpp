#include <benchmark/benchmark.h>

#include "pgolay/fixture.hpp"
#include "pgolay/orbits.hpp"
#include "pgolay/sds.hpp"
#include "pgolay/search.hpp"

using namespace pgolay;

namespace {

const OrbitTable& table74() {
    static const OrbitTable table = orbit_partition(close_subgroup(74, {47}));
    return table;
}

// Enumeration cost over a mid-sized lexicographic window, PSD filter included.
void BM_enumerate_window_v74(benchmark::State& state) {
    SearchPlan plan;
    plan.v = 74;
    plan.h_generators = {47};
    plan.r = 36;
    plan.s = 31;
    plan.window_x.from = std::vector<int>{1, 2};
    plan.window_x.to = std::vector<int>{1, 2, 3, 5};
    for (auto _ : state) {
        EnumStats stats;
        std::uint64_t emitted = 0;
        for_each_candidate(plan, Block::x, table74(),
                           [&emitted](const CandidateRecord&) { ++emitted; }, &stats);
        benchmark::DoNotOptimize(emitted);
        benchmark::DoNotOptimize(stats.combinations);
    }
}

void BM_fingerprint_v74(benchmark::State& state) {
    const SubsetZv x = expand_index_set(table74(), {1, 4, 6, 7, 9, 12, 22, 23, 28, 29, 34, 42});
    for (auto _ : state) {
        benchmark::DoNotOptimize(difference_multiplicities(74, {x}));
    }
}

void BM_canonical_form_v74(benchmark::State& state) {
    const SubsetZv x = expand_index_set(table74(), {1, 4, 6, 7, 9, 12, 22, 23, 28, 29, 34, 42});
    const SubsetZv y = expand_index_set(table74(), {1, 2, 4, 6, 9, 12, 17, 21, 22, 37, 55});
    for (auto _ : state) {
        benchmark::DoNotOptimize(elementary_canonical_form(x, y));
    }
}

void BM_pipeline_v10(benchmark::State& state) {
    SearchPlan plan;
    plan.v = 10;
    plan.h_generators = {1};
    plan.r = 4;
    plan.s = 3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_pipeline(plan));
    }
}

}  // namespace

BENCHMARK(BM_enumerate_window_v74)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fingerprint_v74);
BENCHMARK(BM_canonical_form_v74)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pipeline_v10)->Unit(benchmark::kMillisecond);

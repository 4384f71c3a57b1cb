#include <benchmark/benchmark.h>

#include "asymptest/estimators.hpp"
#include "asymptest/hypothesis.hpp"
#include "asymptest/rng.hpp"

using namespace asymptest;

static void BM_SeVar(benchmark::State& state) {
    const Sample s = sample(DistributionSpec::exponential(1.0), static_cast<std::size_t>(state.range(0)), {1, 0});
    for (auto _ : state) benchmark::DoNotOptimize(se_var(s));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SeVar)->Range(64, 1 << 16);

static void BM_AsympTestRVar(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Sample x = sample(DistributionSpec::uniform(0, 5), n, {2, 0});
    const Sample y = sample(DistributionSpec::uniform(0, 5), n, {2, 1});
    TestSpec spec;
    spec.parameter = Parameter::RVar;
    spec.reference = 1.0;
    for (auto _ : state) benchmark::DoNotOptimize(asymp_test(x, y, spec));
    state.SetItemsProcessed(state.iterations() * state.range(0) * 2);
}
BENCHMARK(BM_AsympTestRVar)->Range(64, 1 << 16);

#include <benchmark/benchmark.h>

#include "divtop/commands.hpp"
#include "divtop/fuzz.hpp"
#include "divtop/homology.hpp"

namespace {

divtop::IntegerSet paper_example() {
    return divtop::IntegerSet::from_values({22, 33, 65, 91, 210});
}

void BM_BuildComplexes(benchmark::State& state) {
    divtop::IntegerSet x = paper_example();
    for (auto _ : state) {
        benchmark::DoNotOptimize(divtop::build_common(x));
        benchmark::DoNotOptimize(divtop::build_prime(x));
    }
}
BENCHMARK(BM_BuildComplexes);

void BM_H1PrimeComplex(benchmark::State& state) {
    divtop::SimplicialComplex d = divtop::build_prime(paper_example());
    for (auto _ : state) {
        benchmark::DoNotOptimize(divtop::h1(d));
    }
}
BENCHMARK(BM_H1PrimeComplex);

void BM_InducedMap(benchmark::State& state) {
    divtop::IntegerSet x = paper_example();
    for (auto _ : state) {
        benchmark::DoNotOptimize(divtop::induced_h1_map(x));
    }
}
BENCHMARK(BM_InducedMap);

void BM_AnalyzeReport(benchmark::State& state) {
    divtop::IntegerSet x = paper_example();
    for (auto _ : state) {
        benchmark::DoNotOptimize(divtop::cmd_analyze(x));
    }
}
BENCHMARK(BM_AnalyzeReport);

void BM_FuzzTrialBatch(benchmark::State& state) {
    divtop::FuzzConfig config;
    config.trials = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(divtop::run_fuzz(config));
    }
}
BENCHMARK(BM_FuzzTrialBatch)->Arg(10)->Arg(50);

} // namespace

BENCHMARK_MAIN();

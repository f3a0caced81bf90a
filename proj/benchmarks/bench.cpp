#include "thermoflow/bowen.hpp"
#include "thermoflow/perturbation.hpp"
#include "thermoflow/pressure.hpp"
#include "thermoflow/sampling.hpp"
#include "thermoflow/suspension.hpp"

#include <benchmark/benchmark.h>

using namespace thermoflow;

static void BM_PressureDepth(benchmark::State& state) {
    const Sft g = golden_mean();
    SplitMix64 rng(1);
    const LcPotential p = random_lc_potential(g, static_cast<int>(state.range(0)), -1.0, 1.0, rng);
    for (auto _ : state) benchmark::DoNotOptimize(pressure(p).value);
}
BENCHMARK(BM_PressureDepth)->Arg(1)->Arg(3)->Arg(5);

static void BM_Equilibrium(benchmark::State& state) {
    const Sft t3 = triangle3();
    SplitMix64 rng(2);
    const LcPotential p = random_lc_potential(t3, 3, -1.0, 1.0, rng);
    for (auto _ : state) benchmark::DoNotOptimize(equilibrium(p).pi().size());
}
BENCHMARK(BM_Equilibrium);

static void BM_FlowEntropy(benchmark::State& state) {
    const Sft s = full_shift(2);
    SplitMix64 rng(3);
    const Roof roof = random_roof(s, 2, rng);
    for (auto _ : state) benchmark::DoNotOptimize(flow_entropy(roof).t_star);
}
BENCHMARK(BM_FlowEntropy);

static void BM_WordEnumeration(benchmark::State& state) {
    const Sft t3 = triangle3();
    for (auto _ : state) benchmark::DoNotOptimize(t3.words(static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_WordEnumeration)->Arg(6)->Arg(10);

static void BM_VariationalOracle(benchmark::State& state) {
    const LcPotential zero = LcPotential::zero(full_shift(2));
    for (auto _ : state)
        benchmark::DoNotOptimize(pressure_oracle_variational(zero, 100, 0));
}
BENCHMARK(BM_VariationalOracle);

BENCHMARK_MAIN();

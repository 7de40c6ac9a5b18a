// Serial reference vs OpenMP path for each parallel kernel.
#include <benchmark/benchmark.h>

#include <random>

#include "metacs/csmodel.hpp"
#include "metacs/hallittlewood.hpp"
#include "metacs/padicweil.hpp"
#include "metacs/suites.hpp"
#include "metacs/zetagj.hpp"

using namespace metacs;

namespace {

Exec policy(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_hl_symmetrization(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hl_P(Partition({4, 2, 2, 0}), 4, std::nullopt, policy(state)));
  label(state);
}

void BM_cs_weyl_sum(benchmark::State& state) {
  const CSInput in{SymplecticChar::numeric({BigRat(3), BigRat(7, 2), BigRat(11, 5)}), 1};
  for (auto _ : state) benchmark::DoNotOptimize(cs_value_compact(in, Partition({4, 2, 0}), policy(state)));
  label(state);
}

void BM_hilbert_sweep(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<std::pair<PadicScalar, PadicScalar>> pairs;
  for (int i = 0; i < 500; ++i) {
    auto a = random_scalar(rng, 13);
    pairs.emplace_back(a, random_scalar(rng, 13));
  }
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_sweep(pairs, policy(state)));
  label(state);
}

void BM_zeta_series(benchmark::State& state) {
  const auto params = SatakeParams::symbolic(3);
  for (auto _ : state) benchmark::DoNotOptimize(zeta_series(params, 8, policy(state)));
  label(state);
}

void BM_suite_pool(benchmark::State& state) {
  SuiteOptions opts;
  opts.exec = policy(state);
  for (auto _ : state) benchmark::DoNotOptimize(run_suite("clifford", opts));
  label(state);
}

}  // namespace

BENCHMARK(BM_hl_symmetrization)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cs_weyl_sum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hilbert_sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_zeta_series)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_suite_pool)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "rabi/exactdiag.hpp"
#include "rabi/fock.hpp"
#include "rabi/optimize.hpp"
#include "rabi/variational.hpp"

namespace {

using namespace rabi;

const ModelParams kParams = ModelParams::from_lambda(100.0, 1.0, 1.0, 1.1);

void BM_BuildHamiltonian(benchmark::State& state) {
  const Truncation trunc{static_cast<int>(state.range(0)), 1e-12};
  for (auto _ : state) benchmark::DoNotOptimize(build_hamiltonian(kParams, trunc));
}
BENCHMARK(BM_BuildHamiltonian)->Arg(128)->Arg(512);

void BM_ParitySector(benchmark::State& state) {
  const Truncation trunc{static_cast<int>(state.range(0)), 1e-12};
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_parity_sector(kParams, trunc, Parity::Even));
  }
}
BENCHMARK(BM_ParitySector)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_SectorSplitting(benchmark::State& state) {
  const ModelParams p = ModelParams::from_g_ratio(100.0, 1.0, 0.5, 1.02);
  for (auto _ : state) benchmark::DoNotOptimize(sector_splitting(p, Truncation{}));
}
BENCHMARK(BM_SectorSplitting)->Unit(benchmark::kMillisecond);

void BM_Energy2css(benchmark::State& state) {
  const Ansatz2Params a{0.9, 0.3, 4.0, -3.8, 0.08};
  for (auto _ : state) benchmark::DoNotOptimize(energy_2css(kParams, a, Parity::Even));
}
BENCHMARK(BM_Energy2css);

void BM_SolveAnsatz(benchmark::State& state) {
  const AnsatzKind kind{state.range(0) ? AnsatzTag::CSS2 : AnsatzTag::CSS1, Parity::Even};
  for (auto _ : state) benchmark::DoNotOptimize(solve_ansatz(kParams, kind, {}));
}
BENCHMARK(BM_SolveAnsatz)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

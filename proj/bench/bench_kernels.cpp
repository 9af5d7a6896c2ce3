#include <benchmark/benchmark.h>

#include "paircoh/grid_kernels.hpp"
#include "paircoh/specfun.hpp"
#include "paircoh/states.hpp"
#include "paircoh/sweep.hpp"

namespace {

using namespace paircoh;

void BM_QuadratureGrid(benchmark::State& st) {
  const SchmidtState s = pair_coherent(-1.0);
  const int points = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(quadrature_grid(s, -4.0, 4.0, points));
}

void BM_QuadratureGridSerial(benchmark::State& st) {
  const SchmidtState s = pair_coherent(-1.0);
  const int points = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(serial::quadrature_grid(s, -4.0, 4.0, points));
}

void BM_QGrid(benchmark::State& st) {
  const int points = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(q_grid(1.0, 3.0, points, specfun::kPi));
}

void BM_QGridSerial(benchmark::State& st) {
  const int points = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(serial::q_grid(1.0, 3.0, points, specfun::kPi));
}

SweepSettings entropy_sweep(int steps) {
  SweepSettings s;
  s.measure = SweepMeasure::CorrEntropy;
  s.state = SweepState::Both;
  s.zeta_min = 0.0;
  s.zeta_max = 0.95;
  s.steps = steps;
  return s;
}

void BM_Sweep(benchmark::State& st) {
  const SweepSettings s = entropy_sweep(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(run_sweep(s));
}

void BM_SweepSerial(benchmark::State& st) {
  const SweepSettings s = entropy_sweep(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(serial::run_sweep(s));
}

}  // namespace

BENCHMARK(BM_QuadratureGrid)->Arg(81)->Arg(241);
BENCHMARK(BM_QuadratureGridSerial)->Arg(81)->Arg(241);
BENCHMARK(BM_QGrid)->Arg(61)->Arg(201);
BENCHMARK(BM_QGridSerial)->Arg(61)->Arg(201);
BENCHMARK(BM_Sweep)->Arg(101);
BENCHMARK(BM_SweepSerial)->Arg(101);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "xychain/analysis.hpp"
#include "xychain/sweep.hpp"

namespace {

using namespace xychain;

ModelParams bench_params(int n) {
  return make_params(n, 1.0, 1.0, 1.0, 0.7, 1.0, 0.0);
}

void BM_PairObservables(benchmark::State& state) {
  const QuenchKernel kernel(bench_params(static_cast<int>(state.range(0))));
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel.at(t));
    t += 0.05;
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PairObservables)->Range(64, 4096)->Complexity(benchmark::oN);

void BM_EvaluateMeasures(benchmark::State& state) {
  const QuenchKernel kernel(bench_params(256));
  const PairObservables obs = kernel.at(1.7);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_measures(obs));
}
BENCHMARK(BM_EvaluateMeasures);

void BM_EvolveSeries(benchmark::State& state) {
  const ModelParams params = bench_params(400);
  const Axis1D axis = make_axis(0.0, 40.0, 801);
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(evolve_series(params, axis, threads));
}
BENCHMARK(BM_EvolveSeries)->Arg(1)->Arg(2)->Arg(4)->Arg(8)
    ->Unit(benchmark::kMillisecond);

void BM_FieldMap(benchmark::State& state) {
  const ModelParams params = bench_params(100);
  const Axis1D t_axis = make_axis(0.0, 20.0, 101);
  const Axis1D h1_axis = make_axis(0.05, 2.0, 40);
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(field_map(params, t_axis, h1_axis, threads));
}
BENCHMARK(BM_FieldMap)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_RelaxedScan(benchmark::State& state) {
  const ModelParams params = bench_params(400);
  const Axis1D h1_axis = make_axis(0.05, 2.0, 196);
  for (auto _ : state)
    benchmark::DoNotOptimize(relaxed_scan(params, h1_axis, 1));
  state.SetItemsProcessed(state.iterations() * h1_axis.count);
}
BENCHMARK(BM_RelaxedScan)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

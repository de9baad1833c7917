#include <benchmark/benchmark.h>

#include "phinet/analytic.hpp"
#include "phinet/lyapunov.hpp"
#include "phinet/phi.hpp"
#include "phinet/simulate.hpp"
#include "phinet/spectral.hpp"

namespace {

using namespace phinet;

NetworkModel ring(int n, double fraction) {
  // cycle spectral radius is 2
  return NetworkModel(build_cycle(n), fraction * 0.5);
}

void BM_SolveSymmetric(benchmark::State& state) {
  const auto model = ring(static_cast<int>(state.range(0)), 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(solve_symmetric(model));
}
BENCHMARK(BM_SolveSymmetric)->Arg(10)->Arg(40)->Arg(100);

void BM_SolveGeneral(benchmark::State& state) {
  const auto model = ring(static_cast<int>(state.range(0)), 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(solve_general(model));
}
BENCHMARK(BM_SolveGeneral)->Arg(10)->Arg(20)->Arg(40);

void BM_IntegratedInformation(benchmark::State& state) {
  const NetworkModel model(paper_network(static_cast<int>(state.range(0))), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(integrated_information(model));
}
BENCHMARK(BM_IntegratedInformation)->DenseRange(1, 6);

void BM_PhiSymmetricFast(benchmark::State& state) {
  const NetworkModel model(paper_network(static_cast<int>(state.range(0))), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(phi_symmetric_fast(model));
}
BENCHMARK(BM_PhiSymmetricFast)->DenseRange(1, 6);

void BM_PhiRational(benchmark::State& state) {
  const auto tmpl = paper_network(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(phi_rational(tmpl));
}
BENCHMARK(BM_PhiRational)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

void BM_SampleTrajectory(benchmark::State& state) {
  const NetworkModel model(paper_network(1), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(sample_trajectory(model, 100000, 1));
}
BENCHMARK(BM_SampleTrajectory)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

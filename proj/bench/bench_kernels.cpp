// Serial reference vs OpenMP path for the three heavy kernels.

#include <benchmark/benchmark.h>

#include "aekahler/kernels.hpp"
#include "aekahler/mass.hpp"

using namespace aek;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_CurvatureGrid(benchmark::State& state) {
  const auto p = make_profile({FamilyKind::volume, 0.1, std::nullopt});
  const auto radii = log_points(1e-3, 1e3, 2000);
  for (auto _ : state) benchmark::DoNotOptimize(curvature_grid(*p, radii, mode(state)));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_CurvatureGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_InequalityRhs(benchmark::State& state) {
  const auto p = make_profile({FamilyKind::volume, 1.0, std::nullopt});
  Theorem11Spec spec = default_theorem11_spec();
  spec.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(theorem11_rhs(*p, spec));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_InequalityRhs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FamilySweep(benchmark::State& state) {
  const std::vector<double> lambdas = {1.0, 0.1, 0.01, 0.001};
  for (auto _ : state) benchmark::DoNotOptimize(family_sweep(FamilyKind::burns_log, lambdas, mode(state)));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_FamilySweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <cmath>

#include "casimir/classical.hpp"
#include "casimir/dynamics.hpp"

namespace {

casimir::ValidatedModel reference_model() {
  casimir::ModelParams p;
  p.coupling.g0 = 0.5;
  return casimir::validate(p);
}

void BM_EvolveCasimirRoute(benchmark::State& state) {
  const casimir::ValidatedModel model = reference_model();
  casimir::DynamicsConfig c;
  c.y0 = 5.1;
  c.dt = 0.01 * std::sqrt(1000.0);
  c.t_max = static_cast<double>(state.range(0)) * c.dt;
  for (auto _ : state) benchmark::DoNotOptimize(casimir::evolve(model, c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvolveCasimirRoute)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_EvolveClassical(benchmark::State& state) {
  const casimir::ValidatedModel model = reference_model();
  const casimir::PhaseState start{.x1 = 0.3, .x2 = -0.1, .y = 5.0, .p2 = 0.2};
  const auto order = static_cast<casimir::IntegratorOrder>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(casimir::evolve_classical(model, start, 0.05, 500.0, {order, 1}));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_EvolveClassical)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

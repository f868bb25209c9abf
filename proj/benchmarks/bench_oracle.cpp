#include <benchmark/benchmark.h>

#include "casimir/fock_oracle.hpp"

namespace {

casimir::ValidatedModel reference_model() {
  casimir::ModelParams p;
  p.coupling.family = casimir::CouplingFamily::Constant;
  p.coupling.g0 = 0.5;
  return casimir::validate(p);
}

void BM_BuildHamiltonian(benchmark::State& state) {
  const casimir::ValidatedModel model = reference_model();
  const casimir::TruncatedBasis basis(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(casimir::build_hamiltonian(model, 0.0, basis));
}
BENCHMARK(BM_BuildHamiltonian)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_GroundStateFull(benchmark::State& state) {
  const casimir::ValidatedModel model = reference_model();
  const casimir::OperatorMatrix h =
      casimir::build_hamiltonian(model, 0.0, casimir::TruncatedBasis(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(casimir::ground_state(h));
}
BENCHMARK(BM_GroundStateFull)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_OracleObservablesEvenSector(benchmark::State& state) {
  const casimir::ValidatedModel model = reference_model();
  const casimir::TruncatedBasis basis(static_cast<int>(state.range(0)), casimir::Sector::EvenParity);
  for (auto _ : state) benchmark::DoNotOptimize(casimir::oracle_observables(model, 0.0, basis));
}
BENCHMARK(BM_OracleObservablesEvenSector)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

#include <benchmark/benchmark.h>

#include "akltgap/bounds.hpp"
#include "akltgap/epsilon.hpp"

using namespace akltgap;

namespace {

void BM_CoupledSpinProjector(benchmark::State& state) {
  const SpinValue a = SpinValue::from_twice(int(state.range(0)));
  const SpinValue b = SpinValue::from_twice(2);
  for (auto _ : state) {
    auto p = coupled_spin_projector(a, b, a.twice + 2);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_CoupledSpinProjector)->Arg(3)->Arg(4)->Arg(6);

void BM_PatchAssembly(benchmark::State& state) {
  const auto patch = build_patch(
      LatticeFamily::uniform(int(state.range(0)), int(state.range(1))), Region::Yv);
  for (auto _ : state) {
    auto psi = patch_state_tensor(patch);
    benchmark::DoNotOptimize(psi.psi);
  }
  state.SetItemsProcessed(state.iterations() * patch.dimension());
}
BENCHMARK(BM_PatchAssembly)->Args({3, 2})->Args({4, 1})->Args({4, 2});

void BM_SideChannel(benchmark::State& state) {
  for (auto _ : state) {
    auto e = side_channel(int(state.range(0)), 2, Side::Left);
    benchmark::DoNotOptimize(e.m);
  }
}
BENCHMARK(BM_SideChannel)->Arg(3)->Arg(4)->Arg(6);

void BM_BoundReport(benchmark::State& state) {
  const LatticeFamily f = LatticeFamily::uniform(4, int(state.range(0)));
  for (auto _ : state) {
    auto r = bound_report(f);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_BoundReport)->Arg(2)->Arg(6);

void BM_SectorMatrix(benchmark::State& state) {
  const auto patch = build_patch(LatticeFamily::uniform(3, 2), Region::Yv);
  const auto h = assemble_hamiltonian(patch, WeightScheme::HPrime);
  const auto basis = sector_basis(patch, 1);
  for (auto _ : state) {
    auto m = sector_matrix(h, basis);
    benchmark::DoNotOptimize(m);
  }
  state.SetItemsProcessed(state.iterations() * basis.size());
}
BENCHMARK(BM_SectorMatrix);

void BM_EpsilonReduced(benchmark::State& state) {
  const LatticeFamily f =
      LatticeFamily::uniform(int(state.range(0)), int(state.range(1)));
  for (auto _ : state) {
    auto r = epsilon_n(f);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_EpsilonReduced)->Args({3, 1})->Args({3, 2})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

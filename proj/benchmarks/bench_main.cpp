#include <benchmark/benchmark.h>

#include <string>

#include "fqg/actions.hpp"
#include "fqg/builders.hpp"
#include "fqg/haar.hpp"
#include "fqg/multiplicative_unitary.hpp"

namespace {

const char* const kPresets[] = {"kz2", "kz4", "ks3", "fs3", "kz6"};

void BM_Haar(benchmark::State& state) {
  const fqg::FiniteHopfStarAlgebra a = fqg::preset(kPresets[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(fqg::solve_haar(a));
  state.SetLabel(a.name());
}
BENCHMARK(BM_Haar)->DenseRange(0, 4);

void BM_BuildW(benchmark::State& state) {
  const fqg::FiniteHopfStarAlgebra a = fqg::preset(kPresets[state.range(0)]);
  const fqg::GnsData gns = fqg::gns_construct(a, fqg::compute_haar(a));
  for (auto _ : state) benchmark::DoNotOptimize(fqg::build_W(a, gns));
  state.SetLabel(a.name());
}
BENCHMARK(BM_BuildW)->DenseRange(0, 4);

void BM_Pentagon(benchmark::State& state) {
  const fqg::FiniteHopfStarAlgebra a = fqg::preset(kPresets[state.range(0)]);
  const fqg::MultiplicativeUnitary w = fqg::build_W(a, fqg::gns_construct(a, fqg::compute_haar(a)));
  for (auto _ : state) benchmark::DoNotOptimize(fqg::verify_pentagon(w.w()));
  state.SetLabel(a.name());
}
BENCHMARK(BM_Pentagon)->DenseRange(0, 4);

void BM_SlicedCommutativity(benchmark::State& state) {
  const fqg::PresetAlgebra p = fqg::describe_preset("ks3");
  const fqg::CayleyTable s3 = fqg::group_preset("s3");
  const fqg::Functional h = fqg::compute_haar(p.algebra);
  const fqg::MultiplicativeUnitary w = fqg::build_W(p.algebra, fqg::gns_construct(p.algebra, h));
  const fqg::DualSubspace dual = fqg::build_dual_subspace(w);
  const fqg::FiniteGroupAction action =
      fqg::build_group_action(p.algebra, s3, fqg::automorphism_preset("conjugation", p, s3));
  const fqg::IntertwinerData data = fqg::build_intertwiner(action, w, dual, h);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fqg::verify_slice_commutativity(action, w, dual, data, fqg::kDefaultTolerance, fqg::CommutativityMode::Sliced));
  }
}
BENCHMARK(BM_SlicedCommutativity)->Unit(benchmark::kMillisecond);

void BM_FullCommutativity(benchmark::State& state) {
  const fqg::PresetAlgebra p = fqg::describe_preset("kz3");
  const fqg::CayleyTable z2 = fqg::group_preset("z2");
  const fqg::Functional h = fqg::compute_haar(p.algebra);
  const fqg::MultiplicativeUnitary w = fqg::build_W(p.algebra, fqg::gns_construct(p.algebra, h));
  const fqg::DualSubspace dual = fqg::build_dual_subspace(w);
  const fqg::FiniteGroupAction action =
      fqg::build_group_action(p.algebra, z2, fqg::automorphism_preset("inversion", p, z2));
  const fqg::IntertwinerData data = fqg::build_intertwiner(action, w, dual, h);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fqg::verify_slice_commutativity(action, w, dual, data, fqg::kDefaultTolerance, fqg::CommutativityMode::Full));
  }
}
BENCHMARK(BM_FullCommutativity)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "pmfgalois/catalog.hpp"
#include "pmfgalois/galois.hpp"
#include "pmfgalois/totality.hpp"

using namespace pmfgalois;

namespace {

void BM_PreservesAffine(benchmark::State& state) {
  const auto w = affine(2);
  const auto f = identity(2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(preserves(f, w).preserved);
}
BENCHMARK(BM_PreservesAffine);

void BM_PreservesConservativeToffoli(benchmark::State& state) {
  const auto w = conservative(2, 9);
  const auto f = toffoli_gate();
  for (auto _ : state) benchmark::DoNotOptimize(preserves(f, w).preserved);
}
BENCHMARK(BM_PreservesConservativeToffoli);

void BM_CloneClosure(benchmark::State& state) {
  const std::vector<Pmf> g{cnot_gate(), swap_gate(2)};
  for (auto _ : state) benchmark::DoNotOptimize(clone_closure(g, 2, Caps{2, 2, 4}));
}
BENCHMARK(BM_CloneClosure)->Unit(benchmark::kMillisecond);

void BM_PolBounded(benchmark::State& state) {
  const auto all = builtin_weights(2, 9);
  const std::vector<Weight> ws{all[static_cast<std::size_t>(state.range(0))]};
  state.SetLabel(ws[0].label());
  for (auto _ : state) benchmark::DoNotOptimize(pol_bounded(ws, 2, Caps{2, 2, 4}));
}
BENCHMARK(BM_PolBounded)->DenseRange(0, 20)->Unit(benchmark::kMillisecond);

void BM_PermutationClosureToffoli(benchmark::State& state) {
  const std::vector<Pmf> g{toffoli_gate(), cnot_gate(), not_gate()};
  PermutationClosureOptions opts;
  opts.ancilla = true;
  for (auto _ : state) benchmark::DoNotOptimize(permutation_clone_closure(g, 2, 3, opts));
}
BENCHMARK(BM_PermutationClosureToffoli)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

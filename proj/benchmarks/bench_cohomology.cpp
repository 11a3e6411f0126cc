#include <benchmark/benchmark.h>

#include <vector>

#include "supero/cohomology.hpp"
#include "supero/families.hpp"
#include "supero/invariants.hpp"

using namespace supero;

namespace {

void BM_CohomologyGl21(benchmark::State& state) {
  const auto g = build_family("gl", std::vector<int>{2, 1});
  const auto h = even_span(g);
  const auto m = trivial(g);
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(h, m, N).dims());
}
BENCHMARK(BM_CohomologyGl21)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_CochainsTorusAdjoint(benchmark::State& state) {
  const auto g = build_family("gl", std::vector<int>{2, 2});
  const RelativeComplex cx(torus_span(g), adjoint(g));
  const auto p = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cx.cochains(p).dim());
}
BENCHMARK(BM_CochainsTorusAdjoint)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_DdZeroOsp32(benchmark::State& state) {
  const auto g = build_family("osp", std::vector<int>{3, 2});
  const auto h = even_span(g);
  const auto m = natural(g);
  for (auto _ : state) benchmark::DoNotOptimize(check_dd_zero(h, m, 3).size());
}
BENCHMARK(BM_DdZeroOsp32)->Unit(benchmark::kMillisecond);

void BM_InvariantsQ3(benchmark::State& state) {
  const auto g = build_family("q", std::vector<int>{3});
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invariant_dims(g, N).dims);
}
BENCHMARK(BM_InvariantsQ3)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace

#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "supero/linalg.hpp"

using namespace supero;

namespace {

// n x n with about `per_row` nonzeros in [-3, 3] per row, rank deficient by n/4.
SparseMatrix random_matrix(std::size_t n, std::size_t per_row, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> col(0, n - 1);
  std::uniform_int_distribution<int> val(-3, 3);
  std::vector<Triplet> ts;
  const std::size_t free_rows = n - n / 4;
  for (std::size_t i = 0; i < free_rows; ++i)
    for (std::size_t k = 0; k < per_row; ++k)
      if (int v = val(rng)) ts.push_back({i, col(rng), Rational(v)});
  // dependent rows: sums of two earlier rows
  std::vector<Triplet> extra;
  for (std::size_t i = free_rows; i < n; ++i) {
    const std::size_t a = i % free_rows, b = (3 * i + 1) % free_rows;
    for (const auto& t : ts)
      if (t.row == a || t.row == b) extra.push_back({i, t.col, t.value});
  }
  ts.insert(ts.end(), extra.begin(), extra.end());
  std::map<std::pair<std::size_t, std::size_t>, Rational> acc;
  for (const auto& t : ts) acc[{t.row, t.col}] += t.value;
  std::vector<Triplet> merged;
  for (const auto& [rc, v] : acc)
    if (!v.is_zero()) merged.push_back({rc.first, rc.second, v});
  return SparseMatrix::from_triplets(n, n, std::move(merged));
}

void BM_Rank(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 4, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_Nullspace(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 4, 11);
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(m).dim());
}
BENCHMARK(BM_Nullspace)->RangeMultiplier(2)->Range(32, 256);

}  // namespace

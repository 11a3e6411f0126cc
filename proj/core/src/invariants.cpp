#include "supero/invariants.hpp"

#include <algorithm>
#include <cmath>

#include "supero/error.hpp"
#include "supero/families.hpp"
#include "parallel.hpp"

namespace supero {

Representation odd_module(const AlgebraPtr& g) {
  const AlgebraPtr g0 = even_part(g);
  const auto evens = g->indices(Parity::even);
  const auto odds = g->indices(Parity::odd);
  std::vector<std::size_t> local(g->dim(), 0);
  for (std::size_t k = 0; k < odds.size(); ++k) local[odds[k]] = k;
  std::vector<SparseMatrix> acts;
  for (auto e : evens) {
    std::vector<Triplet> ts;
    for (std::size_t k = 0; k < odds.size(); ++k) {
      for (const auto& t : g->bracket_basis(e, odds[k])) ts.push_back({local[t.index], k, t.value});
    }
    acts.push_back(SparseMatrix::from_triplets(odds.size(), odds.size(), std::move(ts)));
  }
  return Representation(g0, std::vector<Parity>(odds.size(), Parity::odd), std::move(acts), "g1");
}

namespace {

std::size_t invariants_in_degree(const Representation& dual_g1, std::size_t j) {
  if (j == 0) return 1;
  if (dual_g1.dim() == 0) return 0;
  const Representation s = super_symmetric_power(dual_g1, j);
  const auto& g0 = *s.algebra();
  const auto weights = basis_weights(s);
  std::vector<std::size_t> zero;  // columns of torus weight 0
  std::vector<std::ptrdiff_t> col(s.dim(), -1);
  for (std::size_t a = 0; a < s.dim(); ++a) {
    if (weights[a].is_zero()) {
      col[a] = static_cast<std::ptrdiff_t>(zero.size());
      zero.push_back(a);
    }
  }
  if (zero.empty()) return 0;
  const auto& torus = g0.torus();
  std::vector<SparseMatrix> blocks;
  for (std::size_t x = 0; x < g0.dim(); ++x) {
    if (std::find(torus.begin(), torus.end(), x) != torus.end()) continue;
    std::vector<Triplet> ts;
    for (const auto& t : s.action(x).triplets()) {
      if (col[t.col] >= 0) ts.push_back({t.row, static_cast<std::size_t>(col[t.col]), t.value});
    }
    blocks.push_back(SparseMatrix::from_triplets(s.dim(), zero.size(), std::move(ts)));
  }
  return simultaneous_nullspace(blocks, zero.size()).dim();
}

}  // namespace

HilbertTable invariant_dims(const AlgebraPtr& g, std::size_t N, unsigned threads) {
  const Representation d = dual(odd_module(g));
  HilbertTable out;
  out.dims.assign(N + 1, 0);
  detail::parallel_for(N + 1, threads, [&](std::size_t j) { out.dims[j] = invariants_in_degree(d, j); });
  return out;
}

InvariantComparison compare_invariants_vs_cohomology(const AlgebraPtr& g, std::size_t N,
                                                     const CohomologyOptions& opts) {
  InvariantComparison c;
  c.algebra = g->name();
  c.N = N;
  c.invariants = invariant_dims(g, N, opts.threads).dims;
  const auto report = cohomology(even_span(g), trivial(g), N, opts);
  c.cohomology = report.dims();
  c.differentials_zero = report.all_differentials_zero;
  for (std::size_t j = 0; j <= N; ++j) {
    if (c.invariants[j] != c.cohomology[j]) c.mismatches.push_back(j);
  }
  c.pass = c.mismatches.empty();
  return c;
}

GrowthEstimate growth_from_dims(std::string label, const std::vector<std::size_t>& dims, std::size_t bound) {
  if (dims.size() < 5) throw ParameterError("growth estimate needs N >= 4");
  const std::size_t N = dims.size() - 1;
  GrowthEstimate g;
  g.label = std::move(label);
  g.window_start = (N + 1) / 2;
  g.window_end = N;
  g.dims = dims;
  g.bound = bound;
  std::vector<double> xs, ys;
  for (std::size_t i = g.window_start; i <= N; ++i) {
    std::size_t d = dims[i];
    if (d == 0) {
      d = dims[i - 1];
      if (i + 1 <= N) d = std::max(d, dims[i + 1]);
    }
    if (d == 0) continue;
    xs.push_back(std::log(static_cast<double>(i)));
    ys.push_back(std::log(static_cast<double>(d)));
  }
  bool all_zero = true;
  for (std::size_t i = g.window_start; i <= N; ++i) all_zero = all_zero && dims[i] == 0;
  if (all_zero) {
    g.eventually_zero = true;
    g.estimated_rate = 0.0;
  } else {
    double slope = 0.0;
    if (xs.size() >= 2) {
      double mx = 0, my = 0;
      for (std::size_t k = 0; k < xs.size(); ++k) mx += xs[k], my += ys[k];
      mx /= static_cast<double>(xs.size());
      my /= static_cast<double>(xs.size());
      double sxy = 0, sxx = 0;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        sxy += (xs[k] - mx) * (ys[k] - my);
        sxx += (xs[k] - mx) * (xs[k] - mx);
      }
      slope = sxy / sxx;
    }
    g.estimated_rate = std::max(0.0, slope + 1.0);
  }
  g.within_bound = g.estimated_rate <= static_cast<double>(bound);
  return g;
}

GrowthEstimate ext_growth(const SubalgebraSpan& h, const Representation& m, const Representation& n, std::size_t N,
                          const CohomologyOptions& opts) {
  if (N < 4) throw ParameterError("ext_growth needs N >= 4");
  const auto report = relative_ext(h, m, n, N, opts);
  const auto& g = *h.parent();
  return growth_from_dims("Ext_(" + g.name() + "," + h.label() + ")(" + m.label() + "," + n.label() + ")",
                          report.dims(), g.dim(Parity::odd));
}

}  // namespace supero

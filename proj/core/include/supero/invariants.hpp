#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "supero/cohomology.hpp"
#include "supero/representation.hpp"

namespace supero {

/// dims[j] = dim S^j(g_1^*)^{g_0}, j = 0..N.
struct HilbertTable {
  std::vector<std::size_t> dims;
};

/// g_1 as a module over even_part(g), through the adjoint action. All basis
/// vectors are odd. Zero-dimensional when g is purely even.
Representation odd_module(const AlgebraPtr& g);

/// Simultaneous kernel of the g_0 action on S^j(g_1^*), computed inside the
/// torus weight-zero subspace.
HilbertTable invariant_dims(const AlgebraPtr& g, std::size_t N, unsigned threads = 1);

struct InvariantComparison {
  std::string algebra;
  std::size_t N = 0;
  std::vector<std::size_t> invariants;
  std::vector<std::size_t> cohomology;  // dim H^j(g, g_0, C)
  bool differentials_zero = true;
  bool pass = true;
  std::vector<std::size_t> mismatches;  // degrees j where the two disagree
};

/// invariant_dims against an independent run of the relative cohomology engine.
InvariantComparison compare_invariants_vs_cohomology(const AlgebraPtr& g, std::size_t N,
                                                     const CohomologyOptions& opts = {});

/// Heuristic rate of growth of dim Ext^i, fitted on a finite window.
struct GrowthEstimate {
  std::string label;
  std::size_t window_start = 0, window_end = 0;
  std::vector<std::size_t> dims;  // raw Ext dims for i = 0..N
  double estimated_rate = 0.0;
  std::size_t bound = 0;  // dim g_1
  bool within_bound = true;
  bool eventually_zero = false;
};

/// Least-squares slope of log dim_i against log i on [ceil(N/2), N], plus one.
/// A zero entry is replaced by the larger of its neighbours (and dropped if that
/// is zero too). Requires N >= 4.
GrowthEstimate growth_from_dims(std::string label, const std::vector<std::size_t>& dims, std::size_t bound);

GrowthEstimate ext_growth(const SubalgebraSpan& h, const Representation& m, const Representation& n, std::size_t N,
                          const CohomologyOptions& opts = {});

}  // namespace supero

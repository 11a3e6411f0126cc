#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "supero/subalgebra.hpp"
#include "supero/weight.hpp"

namespace supero {

struct RootSpace {
  Weight weight;
  std::size_t even_mult = 0;
  std::size_t odd_mult = 0;
  std::vector<std::size_t> basis;  // algebra basis indices, each a weight vector
  std::vector<Parity> parities;
};

/// Joint eigenspaces of ad(torus) on g. Roots are sorted lexicographically.
struct RootDatum {
  AlgebraPtr algebra;
  std::vector<RootSpace> roots;
  std::vector<std::size_t> zero_weight;  // basis indices of weight 0
  std::vector<Weight> basis_weight;      // weight of every basis element

  std::size_t rank() const { return algebra->torus().size(); }
  std::optional<std::size_t> find(const Weight& w) const;
  bool symmetric() const;  // Phi = -Phi
};

/// DecompositionError when the torus does not act diagonally in the basis.
RootDatum root_decomposition(const AlgebraPtr& g);

struct ParabolicDecomposition {
  Functional H;
  std::vector<std::size_t> phi_plus, phi_zero, phi_minus;  // indices into RootDatum::roots
  SubalgebraSpan n_plus;
  SubalgebraSpan levi;
  SubalgebraSpan n_minus;
  /// levi + n_plus; a Borel subalgebra when H is nonzero on every root.
  SubalgebraSpan parabolic;
};

/// Triangular decomposition g = n- + l + n+ cut out by the signs of H on the roots.
/// Each piece is checked for bracket closure.
ParabolicDecomposition principal_parabolic(const RootDatum& rd, const Functional& H);

/// A functional nonzero on every root: lexicographic weights K^{r-1}, ..., K, 1
/// with K large compared with the root coordinates.
Functional generic_functional(const RootDatum& rd);

struct ParabolicCheck {
  bool pass = true;
  std::vector<Weight> witness;
  std::string detail;
};

/// For Phi = -Phi: P inside Phi, Phi = P u -P, and alpha, beta in P with
/// alpha + beta in Phi forces alpha + beta in P. When Phi != -Phi a functional
/// must be supplied; P is then compared with {alpha : H(alpha) >= 0} and the
/// closure condition is checked.
ParabolicCheck check_parabolic_axioms(const RootDatum& rd, const std::vector<Weight>& P,
                                      const std::optional<Functional>& H = std::nullopt);

enum class Order { less, equal, greater, incomparable };
const char* to_string(Order o);

/// Preorder on (weight, parity index) pairs: comparable only for equal parity
/// index, then ordered by the value of H.
Order proset_compare(const Weight& lambda, int i, const Weight& mu, int j, const Functional& H);

}  // namespace supero

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "supero/subalgebra.hpp"
#include "supero/superalgebra.hpp"
#include "supero/weight.hpp"

namespace supero {

/// A finite-dimensional module: actions[i] is the matrix of basis element i of
/// the algebra in the module basis (column j = image of basis vector j).
class Representation {
 public:
  Representation(AlgebraPtr algebra, std::vector<Parity> parities, std::vector<SparseMatrix> actions,
                 std::string label);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t dim() const { return parities_.size(); }
  Parity parity(std::size_t i) const { return parities_[i]; }
  const std::vector<Parity>& parities() const { return parities_; }
  const SparseMatrix& action(std::size_t i) const { return actions_[i]; }
  const std::vector<SparseMatrix>& actions() const { return actions_; }
  const std::string& label() const { return label_; }

  /// Action of an arbitrary algebra element.
  SparseMatrix action_of(const SparseVector& x) const;

 private:
  AlgebraPtr algebra_;
  std::vector<Parity> parities_;
  std::vector<SparseMatrix> actions_;
  std::string label_;
};

/// rho([x, y]) = rho(x)rho(y) - (-1)^{|x||y|} rho(y)rho(x) on basis pairs, and
/// rho(x) shifts module parity by |x|. Witness: the first failing pair.
AxiomCheck check_representation(const Representation& r);

Representation trivial(const AlgebraPtr& g);
Representation adjoint(const AlgebraPtr& g);
/// Defining matrices; UnsupportedError without a matrix realization.
Representation natural(const AlgebraPtr& g);
/// (x.f)(v) = -(-1)^{|x||f|} f(x.v) in the dual basis.
Representation dual(const Representation& r);
/// x.(v (x) w) = (x.v) (x) w + (-1)^{|x||v|} v (x) (x.w); basis index i * dim(s) + j.
Representation tensor(const Representation& r, const Representation& s);
/// Super exterior power with the monomial basis of SuperMonomialBasis; x acts
/// as a derivation: x.(v1...vp) = sum_k (-1)^{|x|(|v1|+...+|v_{k-1}|)} v1...(x.vk)...vp.
Representation super_exterior_power(const Representation& r, std::size_t p);
/// Ordinary symmetric power of a module concentrated in one parity, regarded
/// as an even module. UnsupportedError on mixed parity input.
Representation super_symmetric_power(const Representation& r, std::size_t j);
/// The module viewed over h (in h's own basis). Requires h closed in r's algebra.
Representation restrict(const Representation& r, const SubalgebraSpan& h);
/// h acting on g/h in the coordinates of h.complement().
Representation quotient_action(const SubalgebraSpan& h);

struct WeightSpace {
  std::size_t even = 0;
  std::size_t odd = 0;
  friend bool operator==(const WeightSpace&, const WeightSpace&) = default;
};
using WeightTable = std::map<Weight, WeightSpace>;

/// Weight of each module basis vector under the given torus elements (algebra
/// basis indices). DecompositionError unless they all act diagonally.
std::vector<Weight> basis_weights(const Representation& r, std::span<const std::size_t> torus);
std::vector<Weight> basis_weights(const Representation& r);
WeightTable weight_decomposition(const Representation& r, std::span<const std::size_t> torus);
WeightTable weight_decomposition(const Representation& r);

}  // namespace supero

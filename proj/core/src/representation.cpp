#include "supero/representation.hpp"

#include <string>

#include "supero/error.hpp"
#include "supero/monomial.hpp"

namespace supero {

Representation::Representation(AlgebraPtr algebra, std::vector<Parity> parities, std::vector<SparseMatrix> actions,
                               std::string label)
    : algebra_(std::move(algebra)), parities_(std::move(parities)), actions_(std::move(actions)), label_(std::move(label)) {
  if (!algebra_) throw DimensionError("representation without an algebra");
  if (actions_.size() != algebra_->dim()) throw DimensionError("need one action matrix per algebra basis element");
  for (const auto& a : actions_) {
    if (a.rows() != dim() || a.cols() != dim()) throw DimensionError("action matrix has the wrong size");
  }
}

SparseMatrix Representation::action_of(const SparseVector& x) const {
  if (x.support_end() > algebra_->dim()) throw DimensionError("element longer than algebra dim");
  SparseMatrix m(dim(), dim());
  for (const auto& e : x) m = m + actions_[e.index].scaled(e.value);
  return m;
}

AxiomCheck check_representation(const Representation& r) {
  const auto& g = *r.algebra();
  for (std::size_t x = 0; x < g.dim(); ++x) {
    const auto& a = r.action(x);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (const auto& e : a.row(i)) {
        if (r.parity(i) != r.parity(e.index) + g.parity(x)) return {false, {x}, "action does not respect parity"};
      }
    }
  }
  for (std::size_t x = 0; x < g.dim(); ++x) {
    for (std::size_t y = 0; y < g.dim(); ++y) {
      const Rational s = sign_power(bit(g.parity(x)) * bit(g.parity(y)));
      const SparseMatrix rhs = r.action(x) * r.action(y) - (r.action(y) * r.action(x)).scaled(s);
      if (r.action_of(g.bracket_basis(x, y)) != rhs) return {false, {x, y}, "not a homomorphism"};
    }
  }
  return {};
}

Representation trivial(const AlgebraPtr& g) {
  return Representation(g, {Parity::even}, std::vector<SparseMatrix>(g->dim(), SparseMatrix(1, 1)), "trivial");
}

Representation adjoint(const AlgebraPtr& g) {
  std::vector<SparseMatrix> acts;
  for (std::size_t i = 0; i < g->dim(); ++i) {
    std::vector<SparseVector> cols;
    for (std::size_t j = 0; j < g->dim(); ++j) cols.push_back(g->bracket_basis(i, j));
    acts.push_back(SparseMatrix::from_columns(g->dim(), cols));
  }
  return Representation(g, g->parities(), std::move(acts), "adjoint");
}

Representation natural(const AlgebraPtr& g) {
  const auto& real = g->realization();
  if (!real) throw UnsupportedError(g->name() + " has no matrix realization");
  return Representation(g, real->slot_parity, real->matrices, "natural");
}

Representation dual(const Representation& r) {
  const auto& g = *r.algebra();
  std::vector<SparseMatrix> acts;
  for (std::size_t x = 0; x < g.dim(); ++x) {
    std::vector<Triplet> ts;
    for (const auto& t : r.action(x).triplets()) {
      // A_{t.row, t.col} feeds D_{t.col, t.row} with sign -(-1)^{|x||v_row|}
      ts.push_back({t.col, t.row, -sign_power(bit(g.parity(x)) * bit(r.parity(t.row))) * t.value});
    }
    acts.push_back(SparseMatrix::from_triplets(r.dim(), r.dim(), std::move(ts)));
  }
  return Representation(r.algebra(), r.parities(), std::move(acts), "dual(" + r.label() + ")");
}

namespace {
void same_algebra(const Representation& r, const Representation& s) {
  if (r.algebra() != s.algebra() && !(*r.algebra() == *s.algebra())) {
    throw ParameterError("modules over different algebras");
  }
}
}  // namespace

Representation tensor(const Representation& r, const Representation& s) {
  same_algebra(r, s);
  const auto& g = *r.algebra();
  const std::size_t ds = s.dim(), n = r.dim() * ds;
  std::vector<Parity> par(n);
  for (std::size_t i = 0; i < r.dim(); ++i) {
    for (std::size_t j = 0; j < ds; ++j) par[i * ds + j] = r.parity(i) + s.parity(j);
  }
  std::vector<SparseMatrix> acts;
  for (std::size_t x = 0; x < g.dim(); ++x) {
    const SparseMatrix at = r.action(x).transpose();
    const SparseMatrix bt = s.action(x).transpose();
    std::vector<SparseVector> cols(n);
    for (std::size_t i = 0; i < r.dim(); ++i) {
      const Rational sg = sign_power(bit(g.parity(x)) * bit(r.parity(i)));
      for (std::size_t j = 0; j < ds; ++j) {
        std::vector<SparseEntry> es;
        for (const auto& e : at.row(i)) es.push_back({e.index * ds + j, e.value});
        for (const auto& e : bt.row(j)) es.push_back({i * ds + e.index, sg * e.value});
        cols[i * ds + j] = SparseVector::from_entries(std::move(es));
      }
    }
    acts.push_back(SparseMatrix::from_columns(n, cols));
  }
  return Representation(r.algebra(), std::move(par), std::move(acts), r.label() + "*" + s.label());
}

namespace {

Representation monomial_power(const Representation& r, std::size_t p, SuperMonomialBasis::Kind kind,
                              std::string label) {
  const auto& g = *r.algebra();
  const SuperMonomialBasis basis(r.parities(), p, kind);
  const bool koszul = kind == SuperMonomialBasis::Kind::exterior;
  std::vector<Parity> par(basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) par[a] = koszul ? basis.parity(a) : Parity::even;
  std::vector<SparseMatrix> acts;
  std::vector<std::uint32_t> tuple(p);
  for (std::size_t x = 0; x < g.dim(); ++x) {
    const SparseMatrix at = r.action(x).transpose();
    const unsigned px = bit(g.parity(x));
    std::vector<SparseVector> cols(basis.size());
    for (std::size_t a = 0; a < basis.size(); ++a) {
      const auto mono = basis.monomial(a);
      std::vector<SparseEntry> es;
      unsigned prefix = 0;
      for (std::size_t k = 0; k < p; ++k) {
        const int pre = (koszul && (px & prefix)) ? -1 : 1;
        for (const auto& e : at.row(mono[k])) {
          std::copy(mono.begin(), mono.end(), tuple.begin());
          tuple[k] = static_cast<std::uint32_t>(e.index);
          if (auto nf = basis.normalize(tuple)) es.push_back({nf->index, Rational(pre * nf->sign) * e.value});
        }
        prefix ^= bit(r.parity(mono[k]));
      }
      cols[a] = SparseVector::from_entries(std::move(es));
    }
    acts.push_back(SparseMatrix::from_columns(basis.size(), cols));
  }
  return Representation(r.algebra(), std::move(par), std::move(acts), std::move(label));
}

}  // namespace

Representation super_exterior_power(const Representation& r, std::size_t p) {
  return monomial_power(r, p, SuperMonomialBasis::Kind::exterior,
                        "L" + std::to_string(p) + "(" + r.label() + ")");
}

Representation super_symmetric_power(const Representation& r, std::size_t j) {
  for (std::size_t i = 1; i < r.dim(); ++i) {
    if (r.parity(i) != r.parity(0)) throw UnsupportedError("symmetric power of a module of mixed parity");
  }
  const auto& g = *r.algebra();
  for (std::size_t x = 0; x < g.dim(); ++x) {
    if (g.parity(x) == Parity::odd && !r.action(x).is_zero()) {
      throw UnsupportedError("symmetric power needs the odd part of the algebra to act by zero");
    }
  }
  return monomial_power(r, j, SuperMonomialBasis::Kind::symmetric, "S" + std::to_string(j) + "(" + r.label() + ")");
}

Representation restrict(const Representation& r, const SubalgebraSpan& h) {
  if (h.parent() != r.algebra() && !(*h.parent() == *r.algebra())) {
    throw SubalgebraError("restriction to a subalgebra of a different algebra");
  }
  auto alg = h.as_algebra();
  std::vector<SparseMatrix> acts;
  for (const auto& v : h.vectors()) acts.push_back(r.action_of(v));
  return Representation(alg, r.parities(), std::move(acts), r.label());
}

Representation quotient_action(const SubalgebraSpan& h) {
  auto alg = h.as_algebra();
  const auto& g = *h.parent();
  const auto& comp = h.complement();
  std::vector<Parity> par;
  for (auto c : comp) par.push_back(g.parity(c));
  std::vector<SparseMatrix> acts;
  for (const auto& v : h.vectors()) {
    std::vector<SparseVector> cols;
    for (auto c : comp) cols.push_back(h.quotient_coordinates(g.bracket(v, SparseVector::unit(c))));
    acts.push_back(SparseMatrix::from_columns(comp.size(), cols));
  }
  return Representation(alg, std::move(par), std::move(acts), g.name() + "/" + h.label());
}

std::vector<Weight> basis_weights(const Representation& r, std::span<const std::size_t> torus) {
  std::vector<Weight> out(r.dim(), Weight::zero(torus.size()));
  for (std::size_t k = 0; k < torus.size(); ++k) {
    if (torus[k] >= r.algebra()->dim()) throw DimensionError("torus index out of range");
    const auto& a = r.action(torus[k]);
    if (!a.is_diagonal()) {
      throw DecompositionError("torus element " + std::to_string(torus[k]) + " does not act diagonally on " +
                               r.label());
    }
    for (std::size_t i = 0; i < r.dim(); ++i) out[i].coords[k] = a.at(i, i);
  }
  return out;
}

std::vector<Weight> basis_weights(const Representation& r) { return basis_weights(r, r.algebra()->torus()); }

WeightTable weight_decomposition(const Representation& r, std::span<const std::size_t> torus) {
  WeightTable table;
  const auto ws = basis_weights(r, torus);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    auto& slot = table[ws[i]];
    (r.parity(i) == Parity::even ? slot.even : slot.odd) += 1;
  }
  return table;
}

WeightTable weight_decomposition(const Representation& r) { return weight_decomposition(r, r.algebra()->torus()); }

}  // namespace supero

#include "supero/superalgebra.hpp"

#include <string>

#include "supero/error.hpp"
#include "supero/linalg.hpp"

namespace supero {

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

LieSuperalgebra::LieSuperalgebra(std::string name, std::vector<Parity> parities, std::vector<SparseVector> table,
                                 std::vector<std::size_t> torus, std::optional<MatrixRealization> realization)
    : name_(std::move(name)),
      parities_(std::move(parities)),
      table_(std::move(table)),
      torus_(std::move(torus)),
      realization_(std::move(realization)) {
  const std::size_t n = parities_.size();
  if (table_.size() != n * n) throw DimensionError("bracket table must have dim^2 entries");
  for (const auto& v : table_) {
    if (v.support_end() > n) throw DimensionError("bracket result outside the basis");
  }
  for (auto t : torus_) {
    if (t >= n) throw DimensionError("torus index out of range");
  }
  if (realization_) {
    if (realization_->matrices.size() != n) throw DimensionError("realization must give one matrix per basis element");
    if (realization_->slot_parity.size() != realization_->size) throw DimensionError("realization slot parity size");
  }
}

std::size_t LieSuperalgebra::dim(Parity p) const {
  std::size_t c = 0;
  for (auto q : parities_) c += (q == p);
  return c;
}

std::vector<std::size_t> LieSuperalgebra::indices(Parity p) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < parities_.size(); ++i) {
    if (parities_[i] == p) out.push_back(i);
  }
  return out;
}

SparseVector LieSuperalgebra::bracket(const SparseVector& x, const SparseVector& y) const {
  if (x.support_end() > dim() || y.support_end() > dim()) throw DimensionError("bracket operand longer than dim");
  SparseVector out;
  for (const auto& a : x) {
    for (const auto& b : y) out.add_scaled(bracket_basis(a.index, b.index), a.value * b.value);
  }
  return out;
}

std::optional<Parity> LieSuperalgebra::parity_of(const SparseVector& v) const {
  if (v.is_zero() || v.support_end() > dim()) return std::nullopt;
  const Parity p = parities_[v.leading_index()];
  for (const auto& e : v) {
    if (parities_[e.index] != p) return std::nullopt;
  }
  return p;
}

LieSuperalgebra LieSuperalgebra::relabeled(std::span<const std::size_t> perm, std::string name) const {
  const std::size_t n = dim();
  if (perm.size() != n) throw DimensionError("permutation length must equal dim");
  std::vector<std::size_t> inverse(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (perm[k] >= n || inverse[perm[k]] != n) throw DimensionError("not a permutation");
    inverse[perm[k]] = k;
  }
  auto remap = [&](const SparseVector& v) {
    std::vector<SparseEntry> es;
    for (const auto& e : v) es.push_back({inverse[e.index], e.value});
    return SparseVector::from_entries(std::move(es));
  };
  std::vector<Parity> par(n);
  std::vector<SparseVector> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    par[a] = parities_[perm[a]];
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = remap(bracket_basis(perm[a], perm[b]));
  }
  std::vector<std::size_t> torus;
  for (auto t : torus_) torus.push_back(inverse[t]);
  std::optional<MatrixRealization> real;
  if (realization_) {
    real = MatrixRealization{realization_->size, realization_->slot_parity, {}};
    for (std::size_t a = 0; a < n; ++a) real->matrices.push_back(realization_->matrices[perm[a]]);
  }
  return LieSuperalgebra(std::move(name), std::move(par), std::move(table), std::move(torus), std::move(real));
}

namespace {

SparseVector bracket_with_basis(const LieSuperalgebra& g, std::size_t i, const SparseVector& v) {
  SparseVector out;
  for (const auto& e : v) out.add_scaled(g.bracket_basis(i, e.index), e.value);
  return out;
}

}  // namespace

AxiomCheck check_super_jacobi(const LieSuperalgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t x = 0; x < n; ++x) {
    const unsigned px = bit(g.parity(x));
    for (std::size_t y = 0; y < n; ++y) {
      const unsigned py = bit(g.parity(y));
      for (std::size_t z = 0; z < n; ++z) {
        const unsigned pz = bit(g.parity(z));
        SparseVector sum = bracket_with_basis(g, x, g.bracket_basis(y, z)).scaled(sign_power(px * pz));
        sum.add_scaled(bracket_with_basis(g, y, g.bracket_basis(z, x)), sign_power(py * px));
        sum.add_scaled(bracket_with_basis(g, z, g.bracket_basis(x, y)), sign_power(pz * py));
        if (!sum.is_zero()) return {false, {x, y, z}, "super Jacobi identity fails"};
      }
    }
  }
  return {};
}

AxiomCheck check_super_antisymmetry(const LieSuperalgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      const unsigned s = bit(g.parity(x)) * bit(g.parity(y));
      SparseVector sum = g.bracket_basis(x, y);
      sum.add_scaled(g.bracket_basis(y, x), sign_power(s));
      if (!sum.is_zero()) return {false, {x, y}, "super antisymmetry fails"};
    }
  }
  return {};
}

AxiomCheck check_parity_consistency(const LieSuperalgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Parity p = g.parity(x) + g.parity(y);
      for (const auto& e : g.bracket_basis(x, y)) {
        if (g.parity(e.index) != p) return {false, {x, y}, "bracket has a component of the wrong parity"};
      }
    }
  }
  return {};
}

AxiomCheck check_torus(const LieSuperalgebra& g) {
  for (auto t : g.torus()) {
    if (g.parity(t) != Parity::even) return {false, {t}, "torus element is odd"};
    for (auto s : g.torus()) {
      if (!g.bracket_basis(t, s).is_zero()) return {false, {t, s}, "torus elements do not commute"};
    }
    for (std::size_t j = 0; j < g.dim(); ++j) {
      for (const auto& e : g.bracket_basis(t, j)) {
        if (e.index != j) return {false, {t, j}, "ad(torus) is not diagonal in the basis"};
      }
    }
  }
  return {};
}

std::optional<Parity> matrix_parity(const SparseMatrix& m, std::span<const Parity> slot_parity) {
  std::optional<Parity> p;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row(r)) {
      const Parity q = slot_parity[r] + slot_parity[e.index];
      if (p && *p != q) return std::nullopt;
      p = q;
    }
  }
  return p;
}

SparseMatrix super_commutator(const SparseMatrix& x, Parity px, const SparseMatrix& y, Parity py) {
  return x * y - (y * x).scaled(sign_power(bit(px) * bit(py)));
}

namespace {

SparseVector flatten(const SparseMatrix& m) {
  std::vector<SparseEntry> es;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row(r)) es.push_back({r * m.cols() + e.index, e.value});
  }
  return SparseVector::from_entries(std::move(es));
}

}  // namespace

LieSuperalgebra algebra_from_matrices(std::string name, MatrixRealization realization, std::vector<std::size_t> torus) {
  const std::size_t n = realization.matrices.size();
  const std::size_t sz = realization.size;
  std::vector<Parity> par(n);
  std::vector<SparseVector> flat(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& m = realization.matrices[i];
    if (m.rows() != sz || m.cols() != sz) throw DimensionError("realization matrix has the wrong size");
    auto p = matrix_parity(m, realization.slot_parity);
    if (!p) throw SubalgebraError(name + ": basis matrix " + std::to_string(i) + " is zero or not homogeneous");
    par[i] = *p;
    flat[i] = flatten(m);
  }
  const SpanSolver solver(sz * sz, flat);
  std::vector<SparseVector> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const SparseMatrix c = super_commutator(realization.matrices[i], par[i], realization.matrices[j], par[j]);
      auto coords = solver.coordinates(flatten(c));
      if (!coords) {
        throw SubalgebraError(name + ": matrices not closed under the super commutator at (" + std::to_string(i) +
                              ", " + std::to_string(j) + ")");
      }
      table[i * n + j] = std::move(*coords);
    }
  }
  return LieSuperalgebra(std::move(name), std::move(par), std::move(table), std::move(torus), std::move(realization));
}

}  // namespace supero

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "supero/sparse.hpp"

namespace supero {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<unsigned>(a) ^ static_cast<unsigned>(b));
}
inline constexpr unsigned bit(Parity p) { return static_cast<unsigned>(p); }
inline constexpr Parity parity_of_bit(unsigned b) { return static_cast<Parity>(b & 1U); }
const char* to_string(Parity p);

/// Defining supermatrices for a matrix family: basis element i acts on
/// C^{size} by matrices[i]; slot_parity grades the underlying super vector space.
struct MatrixRealization {
  std::size_t size = 0;
  std::vector<Parity> slot_parity;
  std::vector<SparseMatrix> matrices;

  friend bool operator==(const MatrixRealization&, const MatrixRealization&) = default;
};

/// Finite-dimensional Lie superalgebra given by a homogeneous basis and its
/// structure constants: [b_i, b_j] = bracket_basis(i, j).
class LieSuperalgebra {
 public:
  /// `table` is indexed by i * dim + j. Only shapes are validated here; the
  /// axioms are checked by check_super_jacobi and friends.
  LieSuperalgebra(std::string name, std::vector<Parity> parities, std::vector<SparseVector> table,
                  std::vector<std::size_t> torus, std::optional<MatrixRealization> realization = std::nullopt);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return parities_.size(); }
  Parity parity(std::size_t i) const { return parities_[i]; }
  const std::vector<Parity>& parities() const { return parities_; }
  const SparseVector& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  const std::vector<SparseVector>& table() const { return table_; }
  const std::vector<std::size_t>& torus() const { return torus_; }
  const std::optional<MatrixRealization>& realization() const { return realization_; }

  std::size_t dim(Parity p) const;
  std::vector<std::size_t> indices(Parity p) const;
  bool is_purely_even() const { return dim(Parity::odd) == 0; }

  /// Bilinear extension of the table. Throws DimensionError on length mismatch.
  SparseVector bracket(const SparseVector& x, const SparseVector& y) const;
  /// Parity of a homogeneous vector; nullopt for mixed or zero vectors.
  std::optional<Parity> parity_of(const SparseVector& v) const;

  /// Same algebra in a permuted basis: new basis element k is old element perm[k].
  LieSuperalgebra relabeled(std::span<const std::size_t> perm, std::string name) const;

  friend bool operator==(const LieSuperalgebra&, const LieSuperalgebra&) = default;

 private:
  std::string name_;
  std::vector<Parity> parities_;
  std::vector<SparseVector> table_;
  std::vector<std::size_t> torus_;
  std::optional<MatrixRealization> realization_;
};

using AlgebraPtr = std::shared_ptr<const LieSuperalgebra>;

/// Outcome of an axiom check; `witness` names the first offending basis indices.
struct AxiomCheck {
  bool pass = true;
  std::vector<std::size_t> witness;
  std::string detail;
};

/// (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0 on all basis triples.
AxiomCheck check_super_jacobi(const LieSuperalgebra& g);
/// [x,y] = -(-1)^{|x||y|}[y,x] on all basis pairs.
AxiomCheck check_super_antisymmetry(const LieSuperalgebra& g);
/// [b_i,b_j] supported on parity |b_i|+|b_j|.
AxiomCheck check_parity_consistency(const LieSuperalgebra& g);
/// Torus elements are even, commute, and act diagonally in the basis.
AxiomCheck check_torus(const LieSuperalgebra& g);

/// Structure constants of the super commutator XY - (-1)^{|X||Y|}YX on a
/// homogeneous list of supermatrices. Throws SubalgebraError if the span is not closed.
LieSuperalgebra algebra_from_matrices(std::string name, MatrixRealization realization,
                                      std::vector<std::size_t> torus);

/// Super commutator of homogeneous supermatrices.
SparseMatrix super_commutator(const SparseMatrix& x, Parity px, const SparseMatrix& y, Parity py);
/// Parity of a supermatrix over the graded slots; nullopt when mixed or zero.
std::optional<Parity> matrix_parity(const SparseMatrix& m, std::span<const Parity> slot_parity);

}  // namespace supero

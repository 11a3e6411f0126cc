#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "supero/sparse.hpp"

namespace supero {

/// Right null space in reduced form: basis[k] has a 1 at free_columns[k] and
/// zeros at every other free column, so the coordinates of any vector of the
/// null space are its values at the free columns.
struct Nullspace {
  std::size_t cols = 0;
  std::vector<SparseVector> basis;
  std::vector<std::size_t> free_columns;

  std::size_t dim() const { return basis.size(); }
};

/// Incremental row echelon form over Z.
///
/// Rows are stored as primitive integer vectors. A new row is reduced against
/// the existing pivots by fraction-free elimination of its leading entry
/// (row <- p*row - a*pivot, then content removal) until its leading column is
/// free; it then becomes a pivot. The pivot of a row is its first nonzero
/// column, rows are consumed in insertion order, so results are reproducible.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols);

  /// Returns true if v was independent of the rows inserted so far.
  bool insert(const SparseVector& v);
  bool contains(const SparseVector& v) const;

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  /// Sorted pivot columns.
  std::vector<std::size_t> pivot_columns() const;

  /// Reduced row echelon form: leading 1, zeros in every other pivot column,
  /// rows sorted by pivot column.
  std::vector<SparseVector> reduced_rows() const;
  Nullspace nullspace() const;

 private:
  struct IntEntry {
    std::size_t index;
    mpz_class value;
  };
  using IntRow = std::vector<IntEntry>;

  static IntRow to_primitive(const SparseVector& v);
  static void make_primitive(IntRow& row);
  /// row <- p*row - a*pivot where p, a are the leading coefficients at column c.
  static void eliminate(IntRow& row, const IntRow& pivot, std::size_t c);
  void reduce_leading(IntRow& row) const;

  std::size_t cols_;
  std::vector<IntRow> rows_;
  std::vector<std::ptrdiff_t> pivot_of_col_;  // -1 when column is free
};

std::size_t rank(const SparseMatrix& m);
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);
Nullspace nullspace(const SparseMatrix& m);

/// Basis of the intersection of the kernels; equals the kernel of the stacked
/// matrix. Throws DimensionError when a matrix does not have `cols` columns.
std::vector<SparseVector> simultaneous_kernel(std::span<const SparseMatrix> ms, std::size_t cols);
Nullspace simultaneous_nullspace(std::span<const SparseMatrix> ms, std::size_t cols);

/// Coordinates with respect to a list of linearly independent vectors.
///
/// Works over Q with a tracked transformation, meant for the small spans that
/// arise from algebra bases and matrix realizations.
class SpanSolver {
 public:
  /// Throws DimensionError if the vectors are dependent.
  SpanSolver(std::size_t ambient_dim, std::span<const SparseVector> vectors);

  std::size_t size() const { return count_; }
  std::size_t ambient_dim() const { return ambient_; }
  /// Coordinates c with v = sum c_i vectors[i], or nullopt if v is outside the span.
  std::optional<SparseVector> coordinates(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return residual(v).is_zero(); }
  /// v minus its component along the span, computed against the reduced
  /// echelon rows: the result is supported on non-pivot columns only.
  SparseVector residual(const SparseVector& v) const;
  /// Ascending columns that are not pivots of the reduced span.
  std::vector<std::size_t> complement_columns() const;
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

 private:
  std::size_t ambient_;
  std::size_t count_;
  std::vector<std::size_t> pivots_;
  std::vector<SparseVector> reduced_;    // leading 1 at pivots_[k], zero at other pivots
  std::vector<SparseVector> transform_;  // reduced_[k] = sum transform_[k][i] vectors[i]
};

}  // namespace supero

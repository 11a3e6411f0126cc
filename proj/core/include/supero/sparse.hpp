#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <tuple>
#include <vector>

#include "supero/rational.hpp"

namespace supero {

struct SparseEntry {
  std::size_t index;
  Rational value;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sparse vector over Q: entries strictly ascending by index, no stored zeros.
class SparseVector {
 public:
  SparseVector() = default;

  /// Sorts, merges duplicate indices by summation and drops zeros.
  static SparseVector from_entries(std::vector<SparseEntry> entries);
  static SparseVector from_dense(std::span<const Rational> dense);
  static SparseVector unit(std::size_t i, Rational value = Rational(1));

  const std::vector<SparseEntry>& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  std::size_t leading_index() const { return entries_.front().index; }
  const Rational& leading_value() const { return entries_.front().value; }
  /// One past the largest stored index (0 when empty).
  std::size_t support_end() const { return entries_.empty() ? 0 : entries_.back().index + 1; }

  Rational at(std::size_t i) const;
  std::vector<Rational> to_dense(std::size_t n) const;

  /// this += c * other
  void add_scaled(const SparseVector& other, const Rational& c);
  SparseVector scaled(const Rational& c) const;
  Rational dot(const SparseVector& other) const;

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend SparseVector operator+(const SparseVector& a, const SparseVector& b);
  friend SparseVector operator-(const SparseVector& a, const SparseVector& b);
  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<SparseEntry> entries_;
};

struct Triplet {
  std::size_t row;
  std::size_t col;
  Rational value;
};

/// Row-major sparse matrix over Q.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  /// Throws DimensionError on out-of-range or duplicate (row, col) pairs; zeros are dropped.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);
  static SparseMatrix from_rows(std::size_t cols, std::vector<SparseVector> rows);
  static SparseMatrix from_dense(std::initializer_list<std::initializer_list<Rational>> dense);
  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& dense, std::size_t cols);
  static SparseMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors.
  static SparseMatrix from_columns(std::size_t rows, std::span<const SparseVector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseVector& row(std::size_t i) const { return data_[i]; }
  void set_row(std::size_t i, SparseVector v);
  Rational at(std::size_t i, std::size_t j) const { return data_[i].at(j); }

  std::size_t nnz() const;
  bool is_zero() const;
  bool is_diagonal() const;
  std::vector<Triplet> triplets() const;

  SparseMatrix transpose() const;
  SparseVector apply(const SparseVector& v) const;
  SparseMatrix scaled(const Rational& c) const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> data_;
};

/// Vertical concatenation; all inputs must share the column count.
SparseMatrix stack(std::span<const SparseMatrix> blocks, std::size_t cols);

}  // namespace supero

#include "supero/sparse.hpp"

#include <algorithm>
#include <string>

#include "supero/error.hpp"

namespace supero {

SparseVector SparseVector::from_entries(std::vector<SparseEntry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  SparseVector out;
  out.entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.entries_.empty() && out.entries_.back().index == e.index) {
      out.entries_.back().value += e.value;
    } else {
      if (!out.entries_.empty() && out.entries_.back().value.is_zero()) out.entries_.pop_back();
      out.entries_.push_back(std::move(e));
    }
  }
  if (!out.entries_.empty() && out.entries_.back().value.is_zero()) out.entries_.pop_back();
  return out;
}

SparseVector SparseVector::from_dense(std::span<const Rational> dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!dense[i].is_zero()) out.entries_.push_back({i, dense[i]});
  }
  return out;
}

SparseVector SparseVector::unit(std::size_t i, Rational value) {
  SparseVector out;
  if (!value.is_zero()) out.entries_.push_back({i, std::move(value)});
  return out;
}

Rational SparseVector::at(std::size_t i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const SparseEntry& e, std::size_t k) { return e.index < k; });
  if (it != entries_.end() && it->index == i) return it->value;
  return Rational(0);
}

std::vector<Rational> SparseVector::to_dense(std::size_t n) const {
  std::vector<Rational> out(n);
  for (const auto& e : entries_) {
    if (e.index >= n) throw DimensionError("sparse vector index exceeds dense length");
    out[e.index] = e.value;
  }
  return out;
}

void SparseVector::add_scaled(const SparseVector& other, const Rational& c) {
  if (c.is_zero() || other.is_zero()) return;
  std::vector<SparseEntry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->index < b->index)) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->index < a->index) {
      merged.push_back({b->index, b->value * c});
      ++b;
    } else {
      Rational v = a->value + b->value * c;
      if (!v.is_zero()) merged.push_back({a->index, std::move(v)});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

SparseVector SparseVector::scaled(const Rational& c) const {
  SparseVector out;
  if (c.is_zero()) return out;
  out.entries_.reserve(entries_.size());
  for (const auto& e : entries_) out.entries_.push_back({e.index, e.value * c});
  return out;
}

Rational SparseVector::dot(const SparseVector& other) const {
  Rational acc;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->index < b->index) {
      ++a;
    } else if (b->index < a->index) {
      ++b;
    } else {
      acc += a->value * b->value;
      ++a;
      ++b;
    }
  }
  return acc;
}

SparseVector operator+(const SparseVector& a, const SparseVector& b) {
  SparseVector out = a;
  out.add_scaled(b, Rational(1));
  return out;
}

SparseVector operator-(const SparseVector& a, const SparseVector& b) {
  SparseVector out = a;
  out.add_scaled(b, Rational(-1));
  return out;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets) {
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  SparseMatrix m(rows, cols);
  std::vector<std::vector<SparseEntry>> buckets(rows);
  for (std::size_t k = 0; k < triplets.size(); ++k) {
    auto& t = triplets[k];
    if (t.row >= rows || t.col >= cols) {
      throw DimensionError("triplet (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
                           ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    if (k > 0 && triplets[k - 1].row == t.row && triplets[k - 1].col == t.col) {
      throw DimensionError("duplicate triplet (" + std::to_string(t.row) + ", " + std::to_string(t.col) + ")");
    }
    if (!t.value.is_zero()) buckets[t.row].push_back({t.col, std::move(t.value)});
  }
  for (std::size_t i = 0; i < rows; ++i) m.data_[i] = SparseVector::from_entries(std::move(buckets[i]));
  return m;
}

SparseMatrix SparseMatrix::from_rows(std::size_t cols, std::vector<SparseVector> rows) {
  SparseMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, std::move(rows[i]));
  return m;
}

SparseMatrix SparseMatrix::from_dense(std::initializer_list<std::initializer_list<Rational>> dense) {
  std::vector<std::vector<Rational>> rows;
  std::size_t cols = 0;
  for (const auto& r : dense) {
    rows.emplace_back(r);
    cols = std::max(cols, r.size());
  }
  return from_dense(rows, cols);
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& dense, std::size_t cols) {
  SparseMatrix m(dense.size(), cols);
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i].size() != cols) throw DimensionError("ragged dense matrix");
    m.data_[i] = SparseVector::from_dense(dense[i]);
  }
  return m;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i] = SparseVector::unit(i);
  return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, std::span<const SparseVector> columns) {
  std::vector<std::vector<SparseEntry>> buckets(rows);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& e : columns[j]) {
      if (e.index >= rows) throw DimensionError("column vector exceeds row count");
      buckets[e.index].push_back({j, e.value});
    }
  }
  SparseMatrix m(rows, columns.size());
  for (std::size_t i = 0; i < rows; ++i) m.data_[i] = SparseVector::from_entries(std::move(buckets[i]));
  return m;
}

void SparseMatrix::set_row(std::size_t i, SparseVector v) {
  if (i >= rows_) throw DimensionError("row index out of range");
  if (v.support_end() > cols_) throw DimensionError("row vector exceeds column count");
  data_[i] = std::move(v);
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.nnz();
  return n;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SparseVector& r) { return r.is_zero(); });
}

bool SparseMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& e : data_[i]) {
      if (e.index != i) return false;
    }
  }
  return true;
}

std::vector<Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& e : data_[i]) out.push_back({i, e.index, e.value});
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<std::vector<SparseEntry>> buckets(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& e : data_[i]) buckets[e.index].push_back({i, e.value});
  }
  SparseMatrix t(cols_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) t.data_[j] = SparseVector::from_entries(std::move(buckets[j]));
  return t;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  if (v.support_end() > cols_) throw DimensionError("vector length exceeds matrix columns");
  std::vector<SparseEntry> out;
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational x = data_[i].dot(v);
    if (!x.is_zero()) out.push_back({i, std::move(x)});
  }
  SparseVector r = SparseVector::from_entries(std::move(out));
  return r;
}

SparseMatrix SparseMatrix::scaled(const Rational& c) const {
  SparseMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) m.data_[i] = data_[i].scaled(c);
  return m;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  SparseMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    SparseVector acc;
    for (const auto& e : a.data_[i]) acc.add_scaled(b.data_[e.index], e.value);
    m.data_[i] = std::move(acc);
  }
  return m;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
  SparseMatrix m = a;
  for (std::size_t i = 0; i < a.rows_; ++i) m.data_[i].add_scaled(b.data_[i], Rational(1));
  return m;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference shape mismatch");
  SparseMatrix m = a;
  for (std::size_t i = 0; i < a.rows_; ++i) m.data_[i].add_scaled(b.data_[i], Rational(-1));
  return m;
}

SparseMatrix stack(std::span<const SparseMatrix> blocks, std::size_t cols) {
  std::vector<SparseVector> rows;
  for (const auto& b : blocks) {
    if (b.cols() != cols) {
      throw DimensionError("stacked matrices disagree on column count (" + std::to_string(b.cols()) +
                           " vs " + std::to_string(cols) + ")");
    }
    for (std::size_t i = 0; i < b.rows(); ++i) rows.push_back(b.row(i));
  }
  return SparseMatrix::from_rows(cols, std::move(rows));
}

}  // namespace supero

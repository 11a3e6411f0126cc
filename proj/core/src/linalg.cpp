#include "supero/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "supero/error.hpp"

namespace supero {

RowEchelon::RowEchelon(std::size_t cols) : cols_(cols), pivot_of_col_(cols, -1) {}

RowEchelon::IntRow RowEchelon::to_primitive(const SparseVector& v) {
  IntRow row;
  if (v.is_zero()) return row;
  mpz_class lcm = 1;
  for (const auto& e : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.value.den().get_mpz_t());
  row.reserve(v.nnz());
  for (const auto& e : v) {
    mpz_class scaled = lcm / e.value.den();
    scaled *= e.value.num();
    row.push_back({e.index, std::move(scaled)});
  }
  make_primitive(row);
  return row;
}

void RowEchelon::make_primitive(IntRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.value.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().value < 0) g = -g;
  if (g != 1) {
    for (auto& e : row) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
  }
}

void RowEchelon::eliminate(IntRow& row, const IntRow& pivot, std::size_t c) {
  // Both rows lead at column c.
  mpz_class p = pivot.front().value;
  mpz_class a = row.front().value;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
  if (g != 1) {
    mpz_divexact(p.get_mpz_t(), p.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  }
  IntRow out;
  out.reserve(row.size() + pivot.size());
  auto x = row.begin();
  auto y = pivot.begin();
  mpz_class tmp;
  while (x != row.end() || y != pivot.end()) {
    if (y == pivot.end() || (x != row.end() && x->index < y->index)) {
      out.push_back({x->index, p * x->value});
      ++x;
    } else if (x == row.end() || y->index < x->index) {
      out.push_back({y->index, -a * y->value});
      ++y;
    } else {
      if (x->index != c) {
        tmp = p * x->value;
        mpz_submul(tmp.get_mpz_t(), a.get_mpz_t(), y->value.get_mpz_t());
        if (tmp != 0) out.push_back({x->index, tmp});
      }
      ++x;
      ++y;
    }
  }
  row = std::move(out);
}

void RowEchelon::reduce_leading(IntRow& row) const {
  while (!row.empty()) {
    const std::size_t c = row.front().index;
    const auto pi = pivot_of_col_[c];
    if (pi < 0) return;
    eliminate(row, rows_[static_cast<std::size_t>(pi)], c);
    make_primitive(row);
  }
}

bool RowEchelon::insert(const SparseVector& v) {
  if (v.support_end() > cols_) throw DimensionError("row longer than echelon column count");
  IntRow row = to_primitive(v);
  reduce_leading(row);
  if (row.empty()) return false;
  pivot_of_col_[row.front().index] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool RowEchelon::contains(const SparseVector& v) const {
  if (v.support_end() > cols_) return false;
  IntRow row = to_primitive(v);
  reduce_leading(row);
  return row.empty();
}

std::vector<std::size_t> RowEchelon::pivot_columns() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.front().index);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SparseVector> RowEchelon::reduced_rows() const {
  const auto pivots = pivot_columns();
  // Rational rows with leading 1, indexed by position in `pivots`.
  std::vector<SparseVector> reduced(pivots.size());
  std::vector<std::ptrdiff_t> slot_of_col(cols_, -1);
  for (std::size_t k = 0; k < pivots.size(); ++k) slot_of_col[pivots[k]] = static_cast<std::ptrdiff_t>(k);

  for (std::size_t k = pivots.size(); k-- > 0;) {
    const IntRow& src = rows_[static_cast<std::size_t>(pivot_of_col_[pivots[k]])];
    const mpz_class& lead = src.front().value;
    std::vector<SparseEntry> entries;
    entries.reserve(src.size());
    for (const auto& e : src) entries.push_back({e.index, Rational(mpq_class(e.value, lead))});
    SparseVector row = SparseVector::from_entries(std::move(entries));
    // Clear later pivot columns; rows for larger pivots are already reduced.
    SparseVector acc = row;
    for (const auto& e : row) {
      if (e.index == pivots[k]) continue;
      const auto s = slot_of_col[e.index];
      if (s < 0) continue;
      Rational c = acc.at(e.index);
      if (!c.is_zero()) acc.add_scaled(reduced[static_cast<std::size_t>(s)], -c);
    }
    reduced[k] = std::move(acc);
  }
  return reduced;
}

Nullspace RowEchelon::nullspace() const {
  Nullspace ns;
  ns.cols = cols_;
  const auto reduced = reduced_rows();
  std::vector<std::ptrdiff_t> slot_of_free(cols_, -1);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (pivot_of_col_[c] < 0) {
      slot_of_free[c] = static_cast<std::ptrdiff_t>(ns.free_columns.size());
      ns.free_columns.push_back(c);
    }
  }
  std::vector<std::vector<SparseEntry>> buckets(ns.free_columns.size());
  for (std::size_t k = 0; k < ns.free_columns.size(); ++k) buckets[k].push_back({ns.free_columns[k], Rational(1)});
  for (const auto& row : reduced) {
    const std::size_t pc = row.leading_index();
    for (const auto& e : row) {
      const auto s = slot_of_free[e.index];
      if (s >= 0) buckets[static_cast<std::size_t>(s)].push_back({pc, -e.value});
    }
  }
  ns.basis.reserve(buckets.size());
  for (auto& b : buckets) ns.basis.push_back(SparseVector::from_entries(std::move(b)));
  return ns;
}

std::size_t rank(const SparseMatrix& m) {
  // Eliminate along the shorter side.
  if (m.cols() > m.rows() && m.rows() > 0) {
    const SparseMatrix t = m.transpose();
    RowEchelon ech(t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i) ech.insert(t.row(i));
    return ech.rank();
  }
  RowEchelon ech(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) ech.insert(m.row(i));
  return ech.rank();
}

Nullspace nullspace(const SparseMatrix& m) {
  RowEchelon ech(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) ech.insert(m.row(i));
  return ech.nullspace();
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) { return nullspace(m).basis; }

Nullspace simultaneous_nullspace(std::span<const SparseMatrix> ms, std::size_t cols) {
  RowEchelon ech(cols);
  for (const auto& m : ms) {
    if (m.cols() != cols) {
      throw DimensionError("simultaneous kernel: matrix has " + std::to_string(m.cols()) + " columns, expected " +
                           std::to_string(cols));
    }
  }
  for (const auto& m : ms) {
    for (std::size_t i = 0; i < m.rows(); ++i) ech.insert(m.row(i));
  }
  return ech.nullspace();
}

std::vector<SparseVector> simultaneous_kernel(std::span<const SparseMatrix> ms, std::size_t cols) {
  return simultaneous_nullspace(ms, cols).basis;
}

SpanSolver::SpanSolver(std::size_t ambient_dim, std::span<const SparseVector> vectors)
    : ambient_(ambient_dim), count_(vectors.size()) {
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].support_end() > ambient_) throw DimensionError("span vector exceeds ambient dimension");
    SparseVector row = residual(vectors[i]);
    SparseVector t = SparseVector::unit(i);
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      Rational c = vectors[i].at(pivots_[k]);
      if (!c.is_zero()) t.add_scaled(transform_[k], -c);
    }
    if (row.is_zero()) throw DimensionError("span vectors are linearly dependent (vector " + std::to_string(i) + ")");
    const std::size_t pc = row.leading_index();
    const Rational inv = Rational(1) / row.leading_value();
    row = row.scaled(inv);
    t = t.scaled(inv);
    for (std::size_t k = 0; k < reduced_.size(); ++k) {
      Rational c = reduced_[k].at(pc);
      if (!c.is_zero()) {
        reduced_[k].add_scaled(row, -c);
        transform_[k].add_scaled(t, -c);
      }
    }
    pivots_.push_back(pc);
    reduced_.push_back(std::move(row));
    transform_.push_back(std::move(t));
  }
  // Keep pivots sorted for complement reporting; permute rows alongside.
  std::vector<std::size_t> order(pivots_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<std::size_t> p;
  std::vector<SparseVector> r, t;
  for (auto k : order) {
    p.push_back(pivots_[k]);
    r.push_back(std::move(reduced_[k]));
    t.push_back(std::move(transform_[k]));
  }
  pivots_ = std::move(p);
  reduced_ = std::move(r);
  transform_ = std::move(t);
}

SparseVector SpanSolver::residual(const SparseVector& v) const {
  SparseVector r = v;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    Rational c = v.at(pivots_[k]);
    if (!c.is_zero()) r.add_scaled(reduced_[k], -c);
  }
  return r;
}

std::optional<SparseVector> SpanSolver::coordinates(const SparseVector& v) const {
  if (v.support_end() > ambient_) return std::nullopt;
  if (!residual(v).is_zero()) return std::nullopt;
  SparseVector c;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    Rational x = v.at(pivots_[k]);
    if (!x.is_zero()) c.add_scaled(transform_[k], x);
  }
  return c;
}

std::vector<std::size_t> SpanSolver::complement_columns() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (!is_pivot[c]) out.push_back(c);
  }
  return out;
}

}  // namespace supero

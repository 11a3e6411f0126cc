#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "supero/linalg.hpp"
#include "supero/superalgebra.hpp"

namespace supero {

/// A homogeneous subspace of a parent algebra given by spanning vectors in
/// parent coordinates. Construction checks homogeneity and independence;
/// closure is checked on demand (is_closed) or enforced by make_subalgebra.
class SubalgebraSpan {
 public:
  /// Throws SubalgebraError on an inhomogeneous or zero vector and
  /// DimensionError on dependent vectors.
  SubalgebraSpan(AlgebraPtr parent, std::vector<SparseVector> vectors, std::string label);

  const AlgebraPtr& parent() const { return parent_; }
  const std::vector<SparseVector>& vectors() const { return vectors_; }
  const std::string& label() const { return label_; }
  std::size_t dim() const { return vectors_.size(); }
  Parity parity(std::size_t k) const { return parities_[k]; }
  const std::vector<Parity>& parities() const { return parities_; }
  const SpanSolver& solver() const { return *solver_; }

  bool contains(const SparseVector& v) const { return solver_->contains(v); }
  /// First pair (a, b) with [v_a, v_b] outside the span, if any.
  std::optional<std::pair<std::size_t, std::size_t>> closure_witness() const;
  bool is_closed() const { return !closure_witness().has_value(); }
  /// Throws SubalgebraError naming the failing pair.
  void require_closed() const;

  /// Parent basis indices that are not pivots of the reduced span, ascending.
  /// These index a homogeneous complement of the span.
  const std::vector<std::size_t>& complement() const { return complement_; }
  /// Coordinates of v modulo the span, indexed by position in complement().
  SparseVector quotient_coordinates(const SparseVector& v) const;

  /// The span as an algebra named label(), in its own basis (vectors() in
  /// order). Torus: spanning vectors supported on the parent torus. A matrix
  /// realization is carried over when the parent has one. Requires closure.
  /// Built once and shared by copies of this span.
  AlgebraPtr as_algebra() const;

 private:
  AlgebraPtr build_algebra() const;

  AlgebraPtr parent_;
  std::vector<SparseVector> vectors_;
  std::vector<Parity> parities_;
  std::string label_;
  std::shared_ptr<const SpanSolver> solver_;
  std::vector<std::size_t> complement_;
  std::vector<std::ptrdiff_t> complement_slot_;
  struct Cache {
    std::once_flag once;
    AlgebraPtr algebra;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Closed subalgebra or SubalgebraError.
SubalgebraSpan make_subalgebra(AlgebraPtr parent, std::vector<SparseVector> vectors, std::string label);

SubalgebraSpan full_span(const AlgebraPtr& g);
SubalgebraSpan zero_span(const AlgebraPtr& g);
/// g_0, spanned by the even basis vectors.
SubalgebraSpan even_span(const AlgebraPtr& g);
/// The designated torus of g.
SubalgebraSpan torus_span(const AlgebraPtr& g);

/// Composite of an inclusion h -> k -> g: a span of k re-expressed in g's coordinates.
SubalgebraSpan lift_span(const SubalgebraSpan& inner, const SubalgebraSpan& outer, std::string label);

}  // namespace supero

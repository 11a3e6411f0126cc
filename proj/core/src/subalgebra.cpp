#include "supero/subalgebra.hpp"

#include <string>

#include "supero/error.hpp"

namespace supero {

SubalgebraSpan::SubalgebraSpan(AlgebraPtr parent, std::vector<SparseVector> vectors, std::string label)
    : parent_(std::move(parent)), vectors_(std::move(vectors)), label_(std::move(label)) {
  if (!parent_) throw SubalgebraError("subalgebra without a parent algebra");
  parities_.reserve(vectors_.size());
  for (std::size_t k = 0; k < vectors_.size(); ++k) {
    if (vectors_[k].support_end() > parent_->dim()) throw DimensionError("span vector longer than parent dim");
    auto p = parent_->parity_of(vectors_[k]);
    if (!p) throw SubalgebraError(label_ + ": spanning vector " + std::to_string(k) + " is zero or inhomogeneous");
    parities_.push_back(*p);
  }
  solver_ = std::make_shared<const SpanSolver>(parent_->dim(), vectors_);
  complement_ = solver_->complement_columns();
  complement_slot_.assign(parent_->dim(), -1);
  for (std::size_t c = 0; c < complement_.size(); ++c) complement_slot_[complement_[c]] = static_cast<std::ptrdiff_t>(c);
}

std::optional<std::pair<std::size_t, std::size_t>> SubalgebraSpan::closure_witness() const {
  for (std::size_t a = 0; a < vectors_.size(); ++a) {
    for (std::size_t b = a; b < vectors_.size(); ++b) {
      if (!solver_->contains(parent_->bracket(vectors_[a], vectors_[b]))) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

void SubalgebraSpan::require_closed() const {
  if (auto w = closure_witness()) {
    throw SubalgebraError(label_ + ": not closed under the bracket (vectors " + std::to_string(w->first) + ", " +
                          std::to_string(w->second) + ")");
  }
}

SparseVector SubalgebraSpan::quotient_coordinates(const SparseVector& v) const {
  std::vector<SparseEntry> es;
  for (const auto& e : solver_->residual(v)) {
    es.push_back({static_cast<std::size_t>(complement_slot_[e.index]), e.value});
  }
  return SparseVector::from_entries(std::move(es));
}

AlgebraPtr SubalgebraSpan::as_algebra() const {
  std::call_once(cache_->once, [this] { cache_->algebra = build_algebra(); });
  return cache_->algebra;
}

AlgebraPtr SubalgebraSpan::build_algebra() const {
  require_closed();
  const std::size_t n = vectors_.size();
  std::vector<SparseVector> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = *solver_->coordinates(parent_->bracket(vectors_[a], vectors_[b]));
    }
  }
  std::vector<bool> in_torus(parent_->dim(), false);
  for (auto t : parent_->torus()) in_torus[t] = true;
  std::vector<std::size_t> torus;
  for (std::size_t a = 0; a < n; ++a) {
    bool inside = true;
    for (const auto& e : vectors_[a]) inside = inside && in_torus[e.index];
    if (inside) torus.push_back(a);
  }
  std::optional<MatrixRealization> real;
  if (const auto& pr = parent_->realization()) {
    real = MatrixRealization{pr->size, pr->slot_parity, {}};
    for (const auto& v : vectors_) {
      SparseMatrix m(pr->size, pr->size);
      for (const auto& e : v) m = m + pr->matrices[e.index].scaled(e.value);
      real->matrices.push_back(std::move(m));
    }
  }
  return std::make_shared<const LieSuperalgebra>(label_, parities_, std::move(table), std::move(torus),
                                                 std::move(real));
}

SubalgebraSpan make_subalgebra(AlgebraPtr parent, std::vector<SparseVector> vectors, std::string label) {
  SubalgebraSpan s(std::move(parent), std::move(vectors), std::move(label));
  s.require_closed();
  return s;
}

SubalgebraSpan full_span(const AlgebraPtr& g) {
  std::vector<SparseVector> vs;
  for (std::size_t i = 0; i < g->dim(); ++i) vs.push_back(SparseVector::unit(i));
  return SubalgebraSpan(g, std::move(vs), "full");
}

SubalgebraSpan zero_span(const AlgebraPtr& g) { return SubalgebraSpan(g, {}, "zero"); }

SubalgebraSpan even_span(const AlgebraPtr& g) {
  std::vector<SparseVector> vs;
  for (auto i : g->indices(Parity::even)) vs.push_back(SparseVector::unit(i));
  return make_subalgebra(g, std::move(vs), "g0");
}

SubalgebraSpan torus_span(const AlgebraPtr& g) {
  std::vector<SparseVector> vs;
  for (auto t : g->torus()) vs.push_back(SparseVector::unit(t));
  return make_subalgebra(g, std::move(vs), "torus");
}

SubalgebraSpan lift_span(const SubalgebraSpan& inner, const SubalgebraSpan& outer, std::string label) {
  if (inner.parent()->dim() != outer.dim()) throw DimensionError("lift_span: inner span is not inside the outer algebra");
  std::vector<SparseVector> vs;
  for (const auto& v : inner.vectors()) {
    SparseVector w;
    for (const auto& e : v) w.add_scaled(outer.vectors()[e.index], e.value);
    vs.push_back(std::move(w));
  }
  return SubalgebraSpan(outer.parent(), std::move(vs), std::move(label));
}

}  // namespace supero

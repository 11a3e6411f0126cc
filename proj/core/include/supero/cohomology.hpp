#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "supero/linalg.hpp"
#include "supero/representation.hpp"
#include "supero/subalgebra.hpp"

namespace supero {

/// C^p(g, h, M) = Hom_h(L^p_s(g/h), M), split by the parity of the maps.
///
/// A cochain phi is a vector over coordinates (b, a), stored at index
/// a * module_dim + b: the coefficient of m_b in phi(w_a), w_a the a-th
/// monomial of degree p. Coordinate parity is |m_b| + |w_a|. Coordinates whose
/// torus weight cannot match are dropped up front; coords[pi] lists the ones
/// that remain (ascending), and kernel[pi] is the equivariant subspace in
/// those local columns.
struct CochainSpace {
  std::size_t degree = 0;
  std::size_t module_dim = 0;
  std::size_t monomial_count = 0;
  std::array<std::vector<std::size_t>, 2> coords;
  std::array<Nullspace, 2> kernel;

  std::size_t dim(Parity p) const { return kernel[bit(p)].dim(); }
  std::size_t dim() const { return dim(Parity::even) + dim(Parity::odd); }
  /// Basis cochain k of the given parity in global coordinates.
  SparseVector basis_vector(Parity p, std::size_t k) const;
};

/// The relative complex of (g, h) with coefficients in a g-module M.
///
/// The complement of h is spanned by the parent basis vectors that are not
/// pivots of h's reduced span. The differential is evaluated on the whole
/// space of maps and then read off in the equivariant bases; any image that
/// leaves C^{p+1} raises ConventionError.
class RelativeComplex {
 public:
  /// Requires h closed; m must be a module over h.parent().
  RelativeComplex(SubalgebraSpan h, Representation m);

  const SubalgebraSpan& subalgebra() const { return h_; }
  const Representation& module() const { return m_; }
  const Representation& quotient() const { return quotient_; }

  CochainSpace cochains(std::size_t p) const;
  /// d^p : C^p -> C^{p+1}, one matrix per map parity, columns indexed by the
  /// basis of src and rows by the basis of dst.
  std::array<SparseMatrix, 2> differential(const CochainSpace& src, const CochainSpace& dst) const;

 private:
  SubalgebraSpan h_;
  Representation m_;
  Representation quotient_;
  Representation m_h_;
  std::vector<std::vector<SparseVector>> qbracket_;  // [u][v] -> g/h coordinates of [x_u, x_v]
  std::vector<std::size_t> prune_;                    // h generators used for weight pruning
  std::vector<std::size_t> constrain_;                // the remaining h generators
};

struct CohomologyRow {
  std::size_t p = 0;
  std::size_t dimC_even = 0, dimC_odd = 0;
  std::size_t rank_d_even = 0, rank_d_odd = 0;  // rank of d^p
  std::size_t dimH_even = 0, dimH_odd = 0;

  std::size_t dimC() const { return dimC_even + dimC_odd; }
  std::size_t rank_d() const { return rank_d_even + rank_d_odd; }
  std::size_t dimH() const { return dimH_even + dimH_odd; }
};

struct CohomologyReport {
  std::string algebra;
  std::string subalgebra;
  std::string module;
  std::size_t N = 0;
  std::vector<CohomologyRow> rows;  // p = 0..N
  bool all_differentials_zero = true;

  std::vector<std::size_t> dims() const;
};

struct CohomologyOptions {
  /// Assert d^{p+1} d^p = 0 for every computed pair (ConventionError otherwise).
  bool check_dd = true;
  /// Worker threads for the per-degree cochain spaces; 0 picks hardware_concurrency.
  unsigned threads = 1;
};

CohomologyReport cohomology(const SubalgebraSpan& h, const Representation& m, std::size_t N,
                            const CohomologyOptions& opts = {});
/// Ext^p_{(g,h)}(M, N) as H^p(g, h, M* (x) N).
CohomologyReport relative_ext(const SubalgebraSpan& h, const Representation& m, const Representation& n,
                              std::size_t N, const CohomologyOptions& opts = {});

struct DdCheckRow {
  std::size_t p = 0;  // d^{p+1} d^p
  bool zero = true;
};
/// d^{p+1} d^p = 0 for p = 0..max_p, as exact matrix products in the cochain bases.
std::vector<DdCheckRow> check_dd_zero(const SubalgebraSpan& h, const Representation& m, std::size_t max_p,
                                      const CohomologyOptions& opts = {});

/// Default truncation degree: dim g_1 + dim(g_0 / h_0).
std::size_t default_degree(const SubalgebraSpan& h);

}  // namespace supero

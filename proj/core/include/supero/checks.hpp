#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "supero/cohomology.hpp"
#include "supero/roots.hpp"

namespace supero {

/// Subalgebras of a purely even algebra accepted by kunneth_check.
enum class EvenShape { torus, borel, levi, parabolic };
const char* to_string(EvenShape s);

/// torus: the Cartan. borel: parabolic of a generic functional. levi and
/// parabolic use H when given, the generic functional otherwise (so the
/// default Levi is the Cartan).
SubalgebraSpan even_shape(const AlgebraPtr& g0, EvenShape shape, const std::optional<Functional>& H = std::nullopt);

/// True when a contains the torus of its parent and is spanned by the parent
/// basis vectors it contains (a sum of root spaces plus the Cartan).
bool is_torus_stable_shape(const SubalgebraSpan& a);

struct KunnethRow {
  std::size_t n = 0;
  std::size_t lhs = 0;  // dim H^n(g, a)
  std::size_t rhs = 0;  // sum_{p+q=n} dim H^p(g, g_0) dim H^q(g_0, a)
  bool pass = true;
};

struct KunnethCheck {
  std::string algebra;
  std::string subalgebra;
  std::vector<std::size_t> H_g_a, H_g_g0, H_g0_a;
  std::vector<KunnethRow> rows;
  bool pass = true;
};

/// a must be a subalgebra of even_part(g) passing is_torus_stable_shape,
/// otherwise UnsupportedError. Three independent engine runs.
KunnethCheck kunneth_check(const AlgebraPtr& g, const SubalgebraSpan& a, std::size_t N,
                           const CohomologyOptions& opts = {});

struct ConcentrationCheck {
  std::string algebra;
  std::string subalgebra;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> odd_nonzero;  // odd q with H^q != 0
  bool pass = true;
};

/// dim H^q(g0, a, C) = 0 for odd q <= N. g0 must be purely even.
ConcentrationCheck even_concentration_check(const AlgebraPtr& g0, const SubalgebraSpan& a, std::size_t N,
                                            const CohomologyOptions& opts = {});

/// A one- or two-parameter cocharacter, given by its value on each coordinate
/// weight. Roots are integer vectors over the same coordinates.
struct GradingTorus {
  std::string family;
  std::vector<std::string> coords;
  std::size_t rank = 1;
  std::vector<std::vector<Rational>> values;  // values[c].size() == rank
  bool abstract = false;

  std::vector<Rational> pair(std::span<const int> root) const;
};

using IntRoot = std::vector<int>;

/// Families: gl(m,n), q(n), pt(n) with n even, osp(m,2n), and the parameterless
/// D21a, G3, F4. UnsupportedError for anything else.
GradingTorus appendix_torus(const std::string& family, std::span<const int> params);

/// Positive even roots in the coordinates of appendix_torus, for the standard
/// ordering epsilon_1 > epsilon_2 > ... (simple-root coordinates for the
/// exceptional families).
std::vector<IntRoot> positive_even_roots(const std::string& family, std::span<const int> params);

/// Positive even simple roots, same coordinates.
std::vector<IntRoot> simple_even_roots(const std::string& family, std::span<const int> params);

struct AbstractRootData {
  std::string family;
  std::vector<std::string> coords;
  std::vector<IntRoot> positive_even_roots;
  GradingTorus grading;
};

/// D(2,1;alpha), G(3), F(4): no matrix model, only even root data and grading.
AbstractRootData abstract_root_data(const std::string& family);

struct GradingCheck {
  bool pass = true;
  std::optional<IntRoot> witness;
  std::string detail;
};

/// Rank 1: every root pairs to a positive value. Rank 2: every pairing is
/// componentwise >= 0 and nonzero.
GradingCheck check_positive_grading(const GradingTorus& gt, const std::vector<IntRoot>& roots);

struct MonomialCount {
  mpz_class count;        // monomials of degree <= cap with grading sum == target
  Rational epsilon;       // least total grading of a root
  std::size_t degree_bound = 0;  // ceil(total(target) / epsilon)
  std::size_t cap = 0;
  bool stable = false;    // cap >= degree_bound and raising cap changes nothing
};

/// Monomials in the roots (each list entry is a separate variable) whose
/// graded degree equals target. ParameterError unless the grading is positive.
MonomialCount count_graded_monomials(const GradingTorus& gt, const std::vector<IntRoot>& roots,
                                     const std::vector<Rational>& target, std::size_t cap);

}  // namespace supero

#include <gtest/gtest.h>

#include <algorithm>

#include "gen.hpp"
#include "oracles.hpp"
#include "supero/checks.hpp"
#include "supero/error.hpp"
#include "supero/families.hpp"

using namespace supero;

namespace {

using Dims = std::vector<std::size_t>;

std::vector<std::vector<mpq_class>> pairings(const GradingTorus& gt, const std::vector<IntRoot>& roots) {
  std::vector<std::vector<mpq_class>> out;
  for (const auto& r : roots) {
    std::vector<mpq_class> v;
    for (const auto& x : gt.pair(r)) v.push_back(x.raw());
    out.push_back(v);
  }
  return out;
}

std::vector<IntRoot> model_even_roots(const AlgebraPtr& g) {
  std::vector<IntRoot> out;
  for (const auto& s : root_decomposition(g).roots) {
    if (s.even_mult == 0) continue;
    IntRoot r;
    for (const auto& c : s.weight.coords) r.push_back(static_cast<int>(c.num().get_si()));
    out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Grading, GlNNSimpleRootsAreTwo) {
  for (int n = 1; n <= 3; ++n) {
    const std::vector<int> p{n, n};
    const auto gt = appendix_torus("gl", p);
    for (const auto& s : simple_even_roots("gl", p)) EXPECT_EQ(gt.pair(s)[0], Rational(2));
    EXPECT_TRUE(check_positive_grading(gt, positive_even_roots("gl", p)).pass);
  }
}

TEST(Grading, OspOddPattern) {
  const std::vector<int> p{5, 4};
  const auto gt = appendix_torus("osp", p);
  const auto simple = simple_even_roots("osp", p);
  // e1 - e2, e2, d1 - d2, 2 d2
  std::vector<Rational> got;
  for (const auto& s : simple) got.push_back(gt.pair(s)[0]);
  EXPECT_EQ(got, (std::vector<Rational>{Rational(1), Rational(1), Rational(1), Rational(2)}));
}

TEST(Grading, ExceptionalPairings) {
  gen::Gen r(61);
  const auto g3 = appendix_torus("G3", {});
  const auto d21 = appendix_torus("D21a", {});
  for (int trial = 0; trial < 20; ++trial) {
    const int m = r.integer(0, 5), m1 = r.integer(0, 5), m2 = r.integer(0, 5);
    const IntRoot lam{m, m1, m2};
    EXPECT_EQ(g3.pair(lam), (std::vector<Rational>{Rational(m1), Rational(2 * m + m2)}));
    EXPECT_EQ(d21.pair(lam), (std::vector<Rational>{Rational(2 * m + 2 * m2), Rational(2 * m1 + 2 * m2)}));
  }
  EXPECT_EQ(abstract_root_data("G3").positive_even_roots.size(), 7u);
  EXPECT_EQ(abstract_root_data("F4").positive_even_roots.size(), 10u);
  EXPECT_TRUE(abstract_root_data("F4").grading.abstract);
  EXPECT_THROW(abstract_root_data("gl"), UnsupportedError);
}

TEST(Grading, ZeroCocharacterFails) {
  GradingTorus zero;
  zero.family = "gl(2|0)";
  zero.coords = {"e1", "e2"};
  zero.values = {{Rational(0)}, {Rational(0)}};
  const std::vector<int> p{2, 0};
  const auto c = check_positive_grading(zero, positive_even_roots("gl", p));
  EXPECT_FALSE(c.pass);
  ASSERT_TRUE(c.witness);
  EXPECT_EQ(*c.witness, (IntRoot{1, -1}));
}

TEST(Grading, FamiliesListed) {
  const std::vector<gen::Family> fams{{"q", {1}},      {"q", {2}},      {"q", {3}},   {"pt", {2}}, {"osp", {3, 2}},
                                      {"osp", {5, 4}}, {"osp", {4, 4}}, {"D21a", {}}, {"G3", {}},  {"F4", {}}};
  for (const auto& f : fams) {
    const auto gt = appendix_torus(f.name, f.params);
    EXPECT_TRUE(check_positive_grading(gt, positive_even_roots(f.name, f.params)).pass) << gt.family;
  }
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      if (m + n == 0) continue;
      const std::vector<int> p{m, n};
      EXPECT_TRUE(check_positive_grading(appendix_torus("gl", p), positive_even_roots("gl", p)).pass);
    }
}

TEST(Grading, BadFamilies) {
  const std::vector<int> three{3}, none{};
  EXPECT_THROW(appendix_torus("pt", three), UnsupportedError);
  EXPECT_THROW(appendix_torus("E8", none), UnsupportedError);
  EXPECT_THROW(appendix_torus("gl", three), ParameterError);
}

// the closed-form root lists are the positive halves of the models' even roots
TEST(Grading, RootListsMatchMatrixModels) {
  const std::vector<gen::Family> fams{{"gl", {2, 1}}, {"gl", {3, 3}}, {"q", {3}},      {"pt", {2}},
                                      {"osp", {3, 2}}, {"osp", {4, 4}}, {"osp", {5, 4}}, {"osp", {2, 2}}};
  for (const auto& f : fams) {
    std::vector<IntRoot> listed;
    for (auto r : positive_even_roots(f.name, f.params)) {
      listed.push_back(r);
      for (auto& c : r) c = -c;
      listed.push_back(r);
    }
    std::sort(listed.begin(), listed.end());
    EXPECT_EQ(listed, model_even_roots(gen::build(f))) << f.name;
  }
}

TEST(Counting, SmallExamples) {
  const std::vector<int> gl2{2, 0}, gl33{3, 3};
  const auto t2 = appendix_torus("gl", gl2);
  const auto r2 = positive_even_roots("gl", gl2);
  EXPECT_EQ(count_graded_monomials(t2, r2, {Rational(0)}, 5).count, 1);
  EXPECT_EQ(count_graded_monomials(t2, r2, {Rational(6)}, 5).count, 1);
  EXPECT_EQ(count_graded_monomials(t2, r2, {Rational(5)}, 5).count, 0);
  const auto t33 = appendix_torus("gl", gl33);
  const auto r33 = positive_even_roots("gl", gl33);
  const auto c = count_graded_monomials(t33, r33, {Rational(4)}, 2);
  EXPECT_EQ(c.degree_bound, 2u);
  EXPECT_TRUE(c.stable);
  EXPECT_EQ(c.count, oracle::count_monomials_brute(pairings(t33, r33), {mpq_class(4)}, 2));
}

TEST(Counting, RefusesWithoutPositivity) {
  GradingTorus zero;
  zero.coords = {"e1", "e2"};
  zero.values = {{Rational(0)}, {Rational(0)}};
  const std::vector<int> p{2, 0};
  EXPECT_THROW(count_graded_monomials(zero, positive_even_roots("gl", p), {Rational(2)}, 3), ParameterError);
}

// property: DP count equals brute force, and raising the cap past the bound changes nothing
TEST(CountingProperty, MatchesBruteForceAndStabilizes) {
  gen::Gen r(62);
  const std::vector<gen::Family> fams{{"gl", {2, 2}}, {"q", {3}},  {"osp", {3, 2}}, {"osp", {4, 4}},
                                      {"D21a", {}},   {"G3", {}},  {"F4", {}}};
  for (const auto& f : fams) {
    const auto gt = appendix_torus(f.name, f.params);
    const auto roots = positive_even_roots(f.name, f.params);
    const auto vals = pairings(gt, roots);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Rational> target(gt.rank);
      for (int k = r.integer(0, 3); k > 0; --k) {
        const auto v = gt.pair(roots[r.index(roots.size())]);
        for (std::size_t c = 0; c < gt.rank; ++c) target[c] += v[c];
      }
      if (r.coin(0.2)) target[0] += Rational(1);
      const auto first = count_graded_monomials(gt, roots, target, 0);
      const auto at = count_graded_monomials(gt, roots, target, first.degree_bound);
      const auto beyond = count_graded_monomials(gt, roots, target, first.degree_bound + 3);
      EXPECT_TRUE(at.stable) << gt.family;
      EXPECT_EQ(at.count, beyond.count) << gt.family;
      std::vector<mpq_class> tq;
      for (const auto& x : target) tq.push_back(x.raw());
      EXPECT_EQ(at.count, oracle::count_monomials_brute(vals, tq, first.degree_bound)) << gt.family;
    }
  }
}

TEST(Kunneth, Gl21Torus) {
  const auto g = build_gl(2, 1);
  const auto k = kunneth_check(g, even_shape(even_part(g), EvenShape::torus), 4);
  EXPECT_TRUE(k.pass);
  EXPECT_EQ(k.H_g_a, (Dims{1, 0, 2, 0, 2}));
}

TEST(Kunneth, PurelyEvenDegenerates) {
  const auto g = build_sl(2, 0);
  const auto k = kunneth_check(g, even_shape(even_part(g), EvenShape::borel), 3);
  EXPECT_TRUE(k.pass);
  EXPECT_EQ(k.H_g_g0, (Dims{1, 0, 0, 0}));
  EXPECT_EQ(k.H_g_a, k.H_g0_a);
}

TEST(Kunneth, UnsupportedShapes) {
  const auto g = build_gl(2, 1);
  const auto g0 = even_part(g);
  // a single root vector does not contain the torus
  const auto rd = root_decomposition(g0);
  const SubalgebraSpan line(g0, {SparseVector::unit(rd.roots[0].basis[0])}, "line");
  EXPECT_THROW(kunneth_check(g, line, 2), UnsupportedError);
  EXPECT_THROW(kunneth_check(g, torus_span(g), 2), UnsupportedError);  // not inside the even part
}

TEST(Concentration, Examples) {
  const auto sl2 = build_sl(2, 0);
  const auto b = even_concentration_check(sl2, even_shape(sl2, EvenShape::borel), 4);
  EXPECT_TRUE(b.pass);
  EXPECT_EQ(b.dims, (Dims{1, 0, 0, 0, 0}));
  const auto full = even_concentration_check(sl2, full_span(sl2), 2);
  EXPECT_EQ(full.dims, (Dims{1, 0, 0}));
  const auto g0 = even_part(build_gl(2, 1));
  EXPECT_TRUE(even_concentration_check(g0, even_shape(g0, EvenShape::borel), 4).pass);
  EXPECT_THROW(even_concentration_check(build_gl(1, 1), zero_span(build_gl(1, 1)), 2), ParameterError);
}

TEST(Shapes, BorelNeedsRegularFunctional) {
  const auto g0 = even_part(build_gl(2, 1));
  Functional tied;
  tied.values = {Rational(1), Rational(1), Rational(0)};
  EXPECT_THROW(even_shape(g0, EvenShape::borel, tied), ParameterError);
  EXPECT_EQ(even_shape(g0, EvenShape::levi, tied).dim(), 5u);
  EXPECT_TRUE(is_torus_stable_shape(even_shape(g0, EvenShape::parabolic, tied)));
}

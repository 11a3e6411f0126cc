#include <gtest/gtest.h>

#include "gen.hpp"
#include "supero/error.hpp"
#include "supero/roots.hpp"

using namespace supero;

namespace {

Functional functional(std::initializer_list<int> v) {
  Functional f;
  for (int x : v) f.values.emplace_back(x);
  return f;
}

Functional random_functional(gen::Gen& r, std::size_t rank) {
  Functional f;
  for (std::size_t i = 0; i < rank; ++i) f.values.push_back(r.rational(3));
  return f;
}

std::vector<Weight> nonnegative_roots(const RootDatum& rd, const Functional& H) {
  std::vector<Weight> P;
  for (const auto& s : rd.roots)
    if (H(s.weight).sign() >= 0) P.push_back(s.weight);
  return P;
}

bool le(Order o) { return o == Order::less || o == Order::equal; }

}  // namespace

TEST(Roots, GlTwoOne) {
  const auto rd = root_decomposition(build_gl(2, 1));
  ASSERT_EQ(rd.roots.size(), 6u);
  EXPECT_EQ(rd.zero_weight.size(), 3u);
  std::size_t even = 0, odd = 0;
  for (const auto& s : rd.roots) even += s.even_mult, odd += s.odd_mult;
  EXPECT_EQ(even, 2u);
  EXPECT_EQ(odd, 4u);
  EXPECT_TRUE(rd.symmetric());
}

TEST(Roots, QueerRootsCarryBothParities) {
  const auto rd = root_decomposition(build_q(2));
  ASSERT_EQ(rd.roots.size(), 2u);
  for (const auto& s : rd.roots) {
    EXPECT_EQ(s.even_mult, 1u);
    EXPECT_EQ(s.odd_mult, 1u);
  }
  EXPECT_EQ(rd.zero_weight.size(), 4u);  // even and odd Cartan
}

TEST(Roots, PeriplecticIsNotSymmetric) {
  const auto rd = root_decomposition(build_p_tilde(2));
  EXPECT_FALSE(rd.symmetric());
  EXPECT_FALSE(check_parabolic_axioms(rd, {}).pass);  // needs a functional
  const auto H = functional({2, 1});
  EXPECT_TRUE(check_parabolic_axioms(rd, nonnegative_roots(rd, H), H).pass);
}

TEST(Parabolic, NonRegularFunctional) {
  const auto rd = root_decomposition(build_gl(2, 1));
  const auto P = principal_parabolic(rd, functional({1, 1, 0}));
  EXPECT_EQ(P.levi.dim(), 5u);
  EXPECT_EQ(P.n_plus.dim(), 2u);
  EXPECT_EQ(P.n_minus.dim(), 2u);
  EXPECT_EQ(P.parabolic.dim(), 7u);
}

TEST(Parabolic, GenericFunctionalGivesBorel) {
  for (const auto& f : gen::small_families()) {
    const auto rd = root_decomposition(gen::build(f));
    const auto H = generic_functional(rd);
    for (const auto& s : rd.roots) EXPECT_FALSE(H(s.weight).is_zero());
    const auto P = principal_parabolic(rd, H);
    EXPECT_EQ(P.levi.dim(), rd.zero_weight.size());
  }
}

TEST(Parabolic, WrongLengthRejected) {
  const auto rd = root_decomposition(build_gl(1, 1));
  EXPECT_THROW(principal_parabolic(rd, functional({1})), DimensionError);
}

// property: for 50 random functionals the nonnegative roots form a principal
// parabolic set and the triangular pieces add up
TEST(ParabolicProperty, RandomFunctionals) {
  gen::Gen r(41);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = gen::build(r.family(gen::small_families()));
    const auto rd = root_decomposition(g);
    const auto H = random_functional(r, rd.rank());
    const auto Pset = nonnegative_roots(rd, H);
    SCOPED_TRACE(g->name());
    EXPECT_TRUE(check_parabolic_axioms(rd, Pset, H).pass);
    const auto P = principal_parabolic(rd, H);
    EXPECT_EQ(P.n_plus.dim() + P.levi.dim() + P.n_minus.dim(), g->dim());
    EXPECT_EQ(P.phi_plus.size() + P.phi_zero.size() + P.phi_minus.size(), rd.roots.size());
    if (rd.symmetric()) {
      // the Levi roots are P cap -P
      for (auto i : P.phi_zero) EXPECT_TRUE(rd.find(-rd.roots[i].weight).has_value());
      EXPECT_EQ(P.n_plus.dim(), P.n_minus.dim());
    }
  }
}

TEST(ParabolicProperty, DroppingARootBreaksTheAxioms) {
  gen::Gen r(42);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rd = root_decomposition(gen::build(r.family(gen::small_families())));
    if (rd.roots.empty() || !rd.symmetric()) continue;
    const auto H = generic_functional(rd);
    auto P = nonnegative_roots(rd, H);
    P.erase(P.begin() + static_cast<std::ptrdiff_t>(r.index(P.size())));
    EXPECT_FALSE(check_parabolic_axioms(rd, P).pass);
  }
}

// property: the H-order is a preorder, and different parity indices never compare
TEST(ProsetProperty, Preorder) {
  gen::Gen r(43);
  for (int trial = 0; trial < 200; ++trial) {
    const auto H = random_functional(r, 3);
    std::vector<Weight> w;
    for (int k = 0; k < 3; ++k) w.emplace_back(std::vector<Rational>{r.rational(), r.rational(), r.rational()});
    EXPECT_EQ(proset_compare(w[0], 0, w[0], 0, H), Order::equal);
    EXPECT_EQ(proset_compare(w[0], 0, w[1], 1, H), Order::incomparable);
    if (le(proset_compare(w[0], 0, w[1], 0, H)) && le(proset_compare(w[1], 0, w[2], 0, H))) {
      EXPECT_TRUE(le(proset_compare(w[0], 0, w[2], 0, H)));
    }
    // antisymmetry of the strict part
    if (proset_compare(w[0], 1, w[1], 1, H) == Order::less) {
      EXPECT_EQ(proset_compare(w[1], 1, w[0], 1, H), Order::greater);
    }
  }
}

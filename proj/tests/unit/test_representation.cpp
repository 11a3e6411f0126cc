#include <gtest/gtest.h>

#include <map>
#include <set>

#include "gen.hpp"
#include "supero/error.hpp"
#include "supero/monomial.hpp"
#include "supero/representation.hpp"

using namespace supero;

namespace {

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// exterior in the even part times symmetric in the odd part
std::uint64_t super_exterior_brute(std::size_t a, std::size_t b, std::size_t p) {
  std::uint64_t s = 0;
  for (std::size_t k = 0; k <= p; ++k) s += choose(a, k) * (b == 0 ? (p == k) : choose(b + p - k - 1, p - k));
  return s;
}

std::multiset<Weight> weight_multiset(const Representation& r) {
  const auto ws = basis_weights(r);
  return {ws.begin(), ws.end()};
}

}  // namespace

TEST(Monomial, SizesMatchBinomialCounts) {
  for (std::size_t a = 0; a <= 4; ++a) {
    for (std::size_t b = 0; b <= 3; ++b) {
      std::vector<Parity> base(a, Parity::even);
      base.insert(base.end(), b, Parity::odd);
      for (std::size_t p = 0; p <= 5; ++p) {
        const SuperMonomialBasis m(base, p);
        EXPECT_EQ(m.size(), super_exterior_brute(a, b, p)) << a << "|" << b << " p=" << p;
        EXPECT_EQ(super_exterior_dimension(a, b, p), m.size());
        const SuperMonomialBasis s(base, p, SuperMonomialBasis::Kind::symmetric);
        EXPECT_EQ(s.size(), a + b == 0 ? (p == 0) : choose(a + b + p - 1, p));
      }
    }
  }
}

TEST(Monomial, KoszulSigns) {
  // base: 0, 1 even; 2, 3 odd
  const SuperMonomialBasis m({Parity::even, Parity::even, Parity::odd, Parity::odd}, 2);
  std::vector<std::uint32_t> t{1, 0};
  auto n = m.normalize(t);
  ASSERT_TRUE(n);
  EXPECT_EQ(n->sign, -1);  // even-even swap
  t = {3, 2};
  n = m.normalize(t);
  ASSERT_TRUE(n);
  EXPECT_EQ(n->sign, 1);  // odd-odd swap is symmetric
  t = {2, 0};
  n = m.normalize(t);
  ASSERT_TRUE(n);
  EXPECT_EQ(n->sign, -1);  // even-odd swap
  t = {1, 1};
  EXPECT_FALSE(m.normalize(t));  // repeated even factor
  t = {2, 2};
  EXPECT_TRUE(m.normalize(t));   // repeated odd factor survives
}

TEST(Monomial, IndexOfInvertsMonomial) {
  const SuperMonomialBasis m({Parity::even, Parity::odd, Parity::even, Parity::odd, Parity::odd}, 3);
  for (std::size_t a = 0; a < m.size(); ++a) EXPECT_EQ(m.index_of(m.monomial(a)), a);
}

TEST(Representation, StandardModulesAreRepresentations) {
  for (const auto& f : gen::small_families()) {
    const auto g = gen::build(f);
    SCOPED_TRACE(g->name());
    EXPECT_TRUE(check_representation(trivial(g)).pass);
    EXPECT_TRUE(check_representation(adjoint(g)).pass);
    EXPECT_TRUE(check_representation(natural(g)).pass);
    EXPECT_TRUE(check_representation(dual(natural(g))).pass);
    EXPECT_TRUE(check_representation(tensor(natural(g), dual(natural(g)))).pass);
    EXPECT_TRUE(check_representation(super_exterior_power(natural(g), 2)).pass);
  }
}

TEST(Representation, SymmetricPowerOfOddModule) {
  // the odd part of q(2) as a module over its even part, used by the invariants
  const auto g = build_q(2);
  const auto r = restrict(adjoint(g), even_span(g));
  EXPECT_THROW(super_symmetric_power(r, 2), UnsupportedError);  // mixed parity
}

TEST(Representation, DifferentAlgebrasRejected) {
  EXPECT_THROW(tensor(natural(build_gl(1, 1)), natural(build_gl(2, 1))), ParameterError);
}

TEST(Representation, NaturalNeedsRealization) {
  const auto g = build_gl(1, 1);
  const auto bare = std::make_shared<const LieSuperalgebra>(g->name(), g->parities(), g->table(), g->torus());
  EXPECT_THROW(natural(bare), UnsupportedError);
  EXPECT_NO_THROW(adjoint(bare));
}

// property: weights of M (x) N are all sums of a weight of M and one of N, with multiplicity
TEST(RepresentationProperty, TensorWeightsAreConvolution) {
  gen::Gen r(31);
  const std::vector<std::string> kinds{"trivial", "natural", "adjoint", "dual"};
  auto make = [&](const AlgebraPtr& g, const std::string& k) {
    if (k == "trivial") return trivial(g);
    if (k == "natural") return natural(g);
    if (k == "adjoint") return adjoint(g);
    return dual(natural(g));
  };
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = gen::build(r.family(gen::small_families()));
    const auto a = make(g, kinds[r.index(kinds.size())]);
    const auto b = make(g, kinds[r.index(kinds.size())]);
    std::multiset<Weight> expect;
    for (const auto& x : basis_weights(a))
      for (const auto& y : basis_weights(b)) expect.insert(x + y);
    EXPECT_EQ(weight_multiset(tensor(a, b)), expect) << g->name();
  }
}

TEST(RepresentationProperty, DualNegatesWeights) {
  gen::Gen r(32);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = gen::build(r.family(gen::small_families()));
    const auto m = r.coin() ? natural(g) : adjoint(g);
    std::multiset<Weight> neg;
    for (const auto& w : basis_weights(m)) neg.insert(-w);
    EXPECT_EQ(weight_multiset(dual(m)), neg);
  }
}

// dual(dual(M)) acts by P A P with P = diag((-1)^{|v_i|})
TEST(RepresentationProperty, DoubleDualIsParityConjugate) {
  gen::Gen r(33);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = gen::build(r.family(gen::small_families()));
    const auto m = r.coin() ? natural(g) : tensor(natural(g), adjoint(g));
    const auto dd = dual(dual(m));
    std::vector<Triplet> pt;
    for (std::size_t i = 0; i < m.dim(); ++i) pt.push_back({i, i, sign_power(bit(m.parity(i)))});
    const auto P = SparseMatrix::from_triplets(m.dim(), m.dim(), pt);
    for (std::size_t x = 0; x < g->dim(); ++x) EXPECT_EQ(dd.action(x), P * m.action(x) * P);
  }
}

TEST(RepresentationProperty, WeightTableCountsDimension) {
  gen::Gen r(34);
  for (int trial = 0; trial < 15; ++trial) {
    const auto g = gen::build(r.family(gen::small_families()));
    const auto m = super_exterior_power(natural(g), 1 + r.index(3));
    std::size_t total = 0;
    for (const auto& [w, s] : weight_decomposition(m)) total += s.even + s.odd;
    EXPECT_EQ(total, m.dim());
  }
}

TEST(Representation, NonDiagonalTorusRejected) {
  const auto g = build_gl(1, 1);
  // relabel so that the designated torus is an odd-free but non-diagonal pair
  std::vector<SparseMatrix> acts;
  for (std::size_t i = 0; i < g->dim(); ++i) acts.push_back(SparseMatrix::from_dense({{0, 1}, {0, 0}}));
  const Representation bogus(g, {Parity::even, Parity::even}, acts, "bogus");
  EXPECT_THROW(basis_weights(bogus), DecompositionError);
}

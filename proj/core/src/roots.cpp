#include "supero/roots.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "supero/error.hpp"

namespace supero {

std::optional<std::size_t> RootDatum::find(const Weight& w) const {
  auto it = std::lower_bound(roots.begin(), roots.end(), w,
                             [](const RootSpace& r, const Weight& x) { return r.weight < x; });
  if (it != roots.end() && it->weight == w) return static_cast<std::size_t>(it - roots.begin());
  return std::nullopt;
}

bool RootDatum::symmetric() const {
  return std::all_of(roots.begin(), roots.end(), [&](const RootSpace& r) { return find(-r.weight).has_value(); });
}

RootDatum root_decomposition(const AlgebraPtr& g) {
  RootDatum rd;
  rd.algebra = g;
  const auto& torus = g->torus();
  rd.basis_weight.assign(g->dim(), Weight::zero(torus.size()));
  for (std::size_t k = 0; k < torus.size(); ++k) {
    for (std::size_t j = 0; j < g->dim(); ++j) {
      const auto& v = g->bracket_basis(torus[k], j);
      if (v.is_zero()) continue;
      if (v.nnz() != 1 || v.leading_index() != j) {
        throw DecompositionError(g->name() + ": torus element " + std::to_string(torus[k]) +
                                 " is not diagonal on basis element " + std::to_string(j));
      }
      rd.basis_weight[j].coords[k] = v.leading_value();
    }
  }
  std::map<Weight, RootSpace> spaces;
  for (std::size_t j = 0; j < g->dim(); ++j) {
    const Weight& w = rd.basis_weight[j];
    if (w.is_zero()) {
      rd.zero_weight.push_back(j);
      continue;
    }
    auto& s = spaces[w];
    s.weight = w;
    s.basis.push_back(j);
    s.parities.push_back(g->parity(j));
    (g->parity(j) == Parity::even ? s.even_mult : s.odd_mult) += 1;
  }
  for (auto& [w, s] : spaces) rd.roots.push_back(std::move(s));
  return rd;
}

ParabolicDecomposition principal_parabolic(const RootDatum& rd, const Functional& H) {
  if (H.values.size() != rd.rank()) throw DimensionError("functional length must equal the torus rank");
  std::vector<std::size_t> plus, zero, minus;
  std::vector<SparseVector> np, lv, nm;
  for (auto j : rd.zero_weight) lv.push_back(SparseVector::unit(j));
  for (std::size_t r = 0; r < rd.roots.size(); ++r) {
    const int s = H(rd.roots[r].weight).sign();
    auto& idx = s > 0 ? plus : (s < 0 ? minus : zero);
    auto& span = s > 0 ? np : (s < 0 ? nm : lv);
    idx.push_back(r);
    for (auto j : rd.roots[r].basis) span.push_back(SparseVector::unit(j));
  }
  auto sorted = [](std::vector<SparseVector> v) {
    std::sort(v.begin(), v.end(),
              [](const SparseVector& a, const SparseVector& b) { return a.leading_index() < b.leading_index(); });
    return v;
  };
  lv = sorted(std::move(lv));
  np = sorted(std::move(np));
  nm = sorted(std::move(nm));
  std::vector<SparseVector> par = lv;
  par.insert(par.end(), np.begin(), np.end());
  par = sorted(std::move(par));
  const auto& g = rd.algebra;
  return ParabolicDecomposition{H,
                                std::move(plus),
                                std::move(zero),
                                std::move(minus),
                                make_subalgebra(g, std::move(np), "n+"),
                                make_subalgebra(g, std::move(lv), "levi"),
                                make_subalgebra(g, std::move(nm), "n-"),
                                make_subalgebra(g, std::move(par), "parabolic")};
}

Functional generic_functional(const RootDatum& rd) {
  const std::size_t r = rd.rank();
  mpz_class lcm = 1;
  mpq_class max = 0;
  for (const auto& s : rd.roots) {
    for (const auto& c : s.weight.coords) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
      mpq_class a = abs(c.raw());
      if (a > max) max = a;
    }
  }
  const mpq_class scaled = max * lcm;
  mpz_class K = scaled.get_num() / scaled.get_den();
  K = 2 * K + 1;
  Functional H;
  H.values.assign(r, Rational(1));
  mpz_class power = 1;
  for (std::size_t k = r; k-- > 0;) {
    H.values[k] = Rational(mpq_class(power));
    power *= K;
  }
  for (const auto& s : rd.roots) {
    if (H(s.weight).is_zero()) throw ConventionError("generic functional vanishes on a root");
  }
  return H;
}

ParabolicCheck check_parabolic_axioms(const RootDatum& rd, const std::vector<Weight>& P,
                                      const std::optional<Functional>& H) {
  std::set<Weight> in_p;
  for (const auto& w : P) {
    if (!rd.find(w)) return {false, {w}, "element of P is not a root"};
    in_p.insert(w);
  }
  if (rd.symmetric()) {
    for (const auto& s : rd.roots) {
      if (!in_p.count(s.weight) && !in_p.count(-s.weight)) return {false, {s.weight}, "neither alpha nor -alpha in P"};
    }
  } else {
    if (!H) return {false, {}, "Phi != -Phi: a functional is required"};
    for (const auto& s : rd.roots) {
      const bool want = (*H)(s.weight).sign() >= 0;
      if (want != (in_p.count(s.weight) > 0)) return {false, {s.weight}, "P differs from the H-nonnegative roots"};
    }
  }
  for (const auto& a : in_p) {
    for (const auto& b : in_p) {
      const Weight c = a + b;
      if (rd.find(c) && !in_p.count(c)) return {false, {a, b}, "P not closed under root addition"};
    }
  }
  return {};
}

const char* to_string(Order o) {
  switch (o) {
    case Order::less: return "less";
    case Order::equal: return "equal";
    case Order::greater: return "greater";
    case Order::incomparable: return "incomparable";
  }
  return "?";
}

Order proset_compare(const Weight& lambda, int i, const Weight& mu, int j, const Functional& H) {
  if (i != j) return Order::incomparable;
  const Rational a = H(lambda), b = H(mu);
  if (a < b) return Order::less;
  if (b < a) return Order::greater;
  return Order::equal;
}

}  // namespace supero

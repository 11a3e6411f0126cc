#include "supero/cohomology.hpp"

#include <algorithm>
#include <map>

#include "supero/error.hpp"
#include "supero/monomial.hpp"
#include "parallel.hpp"

namespace supero {

namespace {

struct RowTriplet {
  std::size_t row;
  std::size_t col;
  Rational value;
};

std::ptrdiff_t local_index(const std::vector<std::size_t>& coords, std::size_t global) {
  auto it = std::lower_bound(coords.begin(), coords.end(), global);
  if (it == coords.end() || *it != global) return -1;
  return it - coords.begin();
}

}  // namespace

SparseVector CochainSpace::basis_vector(Parity p, std::size_t k) const {
  const auto& local = kernel[bit(p)].basis[k];
  std::vector<SparseEntry> es;
  es.reserve(local.nnz());
  for (const auto& e : local) es.push_back({coords[bit(p)][e.index], e.value});
  return SparseVector::from_entries(std::move(es));
}

RelativeComplex::RelativeComplex(SubalgebraSpan h, Representation m)
    : h_(std::move(h)),
      m_(std::move(m)),
      quotient_(quotient_action(h_)),
      m_h_(restrict(m_, h_)) {
  const auto& g = *h_.parent();
  const auto& comp = h_.complement();
  qbracket_.assign(comp.size(), std::vector<SparseVector>(comp.size()));
  for (std::size_t u = 0; u < comp.size(); ++u) {
    for (std::size_t v = 0; v < comp.size(); ++v) {
      qbracket_[u][v] = h_.quotient_coordinates(g.bracket_basis(comp[u], comp[v]));
    }
  }
  std::vector<bool> pruned(h_.dim(), false);
  for (auto t : quotient_.algebra()->torus()) {
    if (quotient_.action(t).is_diagonal() && m_h_.action(t).is_diagonal()) {
      prune_.push_back(t);
      pruned[t] = true;
    }
  }
  for (std::size_t x = 0; x < h_.dim(); ++x) {
    if (!pruned[x]) constrain_.push_back(x);
  }
}

CochainSpace RelativeComplex::cochains(std::size_t p) const {
  CochainSpace cs;
  cs.degree = p;
  cs.module_dim = m_.dim();
  const std::size_t dm = m_.dim();
  const Representation lp = super_exterior_power(quotient_, p);
  cs.monomial_count = lp.dim();

  // Torus weights of monomials and of module vectors.
  std::vector<Weight> wa(lp.dim(), Weight::zero(prune_.size())), wb(dm, Weight::zero(prune_.size()));
  for (std::size_t k = 0; k < prune_.size(); ++k) {
    const auto& la = lp.action(prune_[k]);
    const auto& ma = m_h_.action(prune_[k]);
    for (std::size_t a = 0; a < lp.dim(); ++a) wa[a].coords[k] = la.at(a, a);
    for (std::size_t b = 0; b < dm; ++b) wb[b].coords[k] = ma.at(b, b);
  }
  std::map<Weight, std::vector<std::size_t>> by_weight;
  for (std::size_t b = 0; b < dm; ++b) by_weight[wb[b]].push_back(b);
  for (std::size_t a = 0; a < lp.dim(); ++a) {
    auto it = by_weight.find(wa[a]);
    if (it == by_weight.end()) continue;
    for (auto b : it->second) cs.coords[bit(m_.parity(b)) ^ bit(lp.parity(a))].push_back(a * dm + b);
  }
  for (auto& c : cs.coords) std::sort(c.begin(), c.end());

  for (unsigned pi = 0; pi < 2; ++pi) {
    const auto& coords = cs.coords[pi];
    RowEchelon ech(coords.size());
    for (auto x : constrain_) {
      const Rational s = sign_power(bit(h_.parity(x)) * pi);
      const SparseMatrix& L = lp.action(x);
      const SparseMatrix AT = m_h_.action(x).transpose();
      std::vector<RowTriplet> ts;
      for (std::size_t col = 0; col < coords.size(); ++col) {
        const std::size_t a = coords[col] / dm, b = coords[col] % dm;
        // phi(x.w) - s x.phi(w) = 0, one row per (b, a)
        for (const auto& e : L.row(a)) ts.push_back({e.index * dm + b, col, e.value});
        for (const auto& e : AT.row(b)) ts.push_back({a * dm + e.index, col, -s * e.value});
      }
      std::sort(ts.begin(), ts.end(), [](const RowTriplet& l, const RowTriplet& r) {
        return l.row != r.row ? l.row < r.row : l.col < r.col;
      });
      for (std::size_t i = 0; i < ts.size();) {
        std::size_t j = i;
        std::vector<SparseEntry> es;
        while (j < ts.size() && ts[j].row == ts[i].row) {
          es.push_back({ts[j].col, std::move(ts[j].value)});
          ++j;
        }
        ech.insert(SparseVector::from_entries(std::move(es)));
        i = j;
      }
    }
    cs.kernel[pi] = ech.nullspace();
  }
  return cs;
}

std::array<SparseMatrix, 2> RelativeComplex::differential(const CochainSpace& src, const CochainSpace& dst) const {
  if (dst.degree != src.degree + 1) throw DimensionError("differential needs consecutive degrees");
  const std::size_t p = src.degree, q = p + 1, dm = m_.dim();
  const auto& vpar = quotient_.parities();
  const SuperMonomialBasis target(vpar, q), source(vpar, p);
  if (target.size() != dst.monomial_count || source.size() != src.monomial_count) {
    throw DimensionError("cochain spaces do not belong to this complex");
  }

  struct Term1 {
    std::uint32_t target;
    Rational coef;
  };
  struct Term2 {
    std::uint32_t target;
    int sign;
    std::uint32_t u;
  };
  // Forward templates: source monomial -> contributions to target monomials.
  std::vector<std::vector<Term1>> fwd1(source.size());
  std::vector<std::vector<Term2>> fwd2(source.size());
  std::vector<std::uint32_t> tuple(p), rest(p);
  std::vector<unsigned> prefix(q);
  for (std::size_t at = 0; at < target.size(); ++at) {
    const auto t = target.monomial(at);
    unsigned acc = 0;
    for (std::size_t k = 0; k < q; ++k) {
      prefix[k] = acc;
      acc ^= bit(vpar[t[k]]);
    }
    // positions are 1-based in the sign formulas: i = k + 1, j = l + 1
    for (std::size_t k = 0; k < q; ++k) {
      const unsigned pk = bit(vpar[t[k]]);
      for (std::size_t l = k + 1; l < q; ++l) {
        const unsigned pl = bit(vpar[t[l]]);
        const unsigned sigma = static_cast<unsigned>((k + 1) + (l + 1)) + pk * prefix[k] + pl * (prefix[l] ^ pk);
        const auto& br = qbracket_[t[k]][t[l]];
        if (br.is_zero()) continue;
        std::size_t w = 1;
        for (std::size_t r = 0; r < q; ++r) {
          if (r != k && r != l) tuple[w++] = t[r];
        }
        for (const auto& e : br) {
          tuple[0] = static_cast<std::uint32_t>(e.index);
          std::vector<std::uint32_t> work(tuple.begin(), tuple.end());
          auto nf = source.normalize(work);
          if (!nf) continue;
          const int sg = ((sigma & 1U) ? -1 : 1) * nf->sign;
          fwd1[nf->index].push_back({static_cast<std::uint32_t>(at), Rational(sg) * e.value});
        }
      }
      const unsigned gamma = static_cast<unsigned>(k + 2) + pk * prefix[k];
      std::size_t w = 0;
      for (std::size_t r = 0; r < q; ++r) {
        if (r != k) rest[w++] = t[r];
      }
      fwd2[source.index_of(rest)].push_back({static_cast<std::uint32_t>(at), (gamma & 1U) ? -1 : 1, t[k]});
    }
  }

  const auto& comp = h_.complement();
  std::vector<SparseMatrix> action_t;
  action_t.reserve(comp.size());
  for (auto c : comp) action_t.push_back(m_.action(c).transpose());

  std::array<SparseMatrix, 2> out;
  std::vector<Rational> acc(target.size() * dm);
  std::vector<char> hit(acc.size(), 0);
  std::vector<std::size_t> touched;
  for (unsigned pi = 0; pi < 2; ++pi) {
    const Parity par = parity_of_bit(pi);
    const auto& ns = dst.kernel[pi];
    std::vector<std::ptrdiff_t> free_slot(dst.coords[pi].size(), -1);
    for (std::size_t j = 0; j < ns.free_columns.size(); ++j) free_slot[ns.free_columns[j]] = static_cast<std::ptrdiff_t>(j);
    std::vector<SparseVector> cols;
    for (std::size_t k = 0; k < src.dim(par); ++k) {
      const SparseVector phi = src.basis_vector(par, k);
      touched.clear();
      auto add = [&](std::size_t idx, const Rational& v) {
        if (!hit[idx]) {
          hit[idx] = 1;
          touched.push_back(idx);
        }
        acc[idx] += v;
      };
      for (const auto& e : phi) {
        const std::size_t a = e.index / dm, b = e.index % dm;
        for (const auto& t1 : fwd1[a]) add(t1.target * dm + b, t1.coef * e.value);
        for (const auto& t2 : fwd2[a]) {
          const int s = t2.sign * ((bit(vpar[t2.u]) & pi) ? -1 : 1);
          for (const auto& me : action_t[t2.u].row(b)) add(t2.target * dm + me.index, Rational(s) * me.value * e.value);
        }
      }
      std::sort(touched.begin(), touched.end());
      std::vector<SparseEntry> local;
      bool escaped = false;
      for (auto idx : touched) {
        if (!acc[idx].is_zero()) {
          const auto li = local_index(dst.coords[pi], idx);
          if (li < 0) {
            escaped = true;
          } else {
            local.push_back({static_cast<std::size_t>(li), acc[idx]});
          }
        }
        acc[idx] = Rational(0);
        hit[idx] = 0;
      }
      if (escaped) {
        throw ConventionError("d^" + std::to_string(p) + " sends a cochain outside the weight-compatible coordinates");
      }
      const SparseVector v = SparseVector::from_entries(std::move(local));
      std::vector<SparseEntry> coeff;
      for (const auto& e : v) {
        if (free_slot[e.index] >= 0) coeff.push_back({static_cast<std::size_t>(free_slot[e.index]), e.value});
      }
      SparseVector c = SparseVector::from_entries(std::move(coeff));
      SparseVector rebuilt;
      for (const auto& e : c) rebuilt.add_scaled(ns.basis[e.index], e.value);
      if (rebuilt != v) {
        throw ConventionError("d^" + std::to_string(p) + " image of a cochain is not h-equivariant");
      }
      cols.push_back(std::move(c));
    }
    out[pi] = SparseMatrix::from_columns(dst.dim(par), cols);
  }
  return out;
}

std::vector<std::size_t> CohomologyReport::dims() const {
  std::vector<std::size_t> d;
  for (const auto& r : rows) d.push_back(r.dimH());
  return d;
}

namespace {

struct Computed {
  std::vector<CochainSpace> C;
  std::vector<std::array<SparseMatrix, 2>> D;
};

Computed compute(const RelativeComplex& cx, std::size_t top, const CohomologyOptions& opts) {
  Computed out;
  out.C.resize(top + 1);
  detail::parallel_for(top + 1, opts.threads, [&](std::size_t p) { out.C[p] = cx.cochains(p); });
  out.D.resize(top);
  detail::parallel_for(top, opts.threads, [&](std::size_t p) { out.D[p] = cx.differential(out.C[p], out.C[p + 1]); });
  return out;
}

bool composite_zero(const std::array<SparseMatrix, 2>& second, const std::array<SparseMatrix, 2>& first) {
  return (second[0] * first[0]).is_zero() && (second[1] * first[1]).is_zero();
}

}  // namespace

CohomologyReport cohomology(const SubalgebraSpan& h, const Representation& m, std::size_t N,
                            const CohomologyOptions& opts) {
  const RelativeComplex cx(h, m);
  const Computed k = compute(cx, N + 1, opts);
  if (opts.check_dd) {
    for (std::size_t p = 0; p + 1 <= N; ++p) {
      if (!composite_zero(k.D[p + 1], k.D[p])) {
        throw ConventionError("d^" + std::to_string(p + 1) + " d^" + std::to_string(p) + " != 0");
      }
    }
  }
  CohomologyReport rep;
  rep.algebra = h.parent()->name();
  rep.subalgebra = h.label();
  rep.module = m.label();
  rep.N = N;
  for (std::size_t p = 0; p <= N; ++p) {
    CohomologyRow row;
    row.p = p;
    row.dimC_even = k.C[p].dim(Parity::even);
    row.dimC_odd = k.C[p].dim(Parity::odd);
    row.rank_d_even = rank(k.D[p][0]);
    row.rank_d_odd = rank(k.D[p][1]);
    const std::size_t prev_even = p == 0 ? 0 : rep.rows[p - 1].rank_d_even;
    const std::size_t prev_odd = p == 0 ? 0 : rep.rows[p - 1].rank_d_odd;
    row.dimH_even = row.dimC_even - row.rank_d_even - prev_even;
    row.dimH_odd = row.dimC_odd - row.rank_d_odd - prev_odd;
    if (!k.D[p][0].is_zero() || !k.D[p][1].is_zero()) rep.all_differentials_zero = false;
    rep.rows.push_back(row);
  }
  return rep;
}

CohomologyReport relative_ext(const SubalgebraSpan& h, const Representation& m, const Representation& n,
                              std::size_t N, const CohomologyOptions& opts) {
  return cohomology(h, tensor(dual(m), n), N, opts);
}

std::vector<DdCheckRow> check_dd_zero(const SubalgebraSpan& h, const Representation& m, std::size_t max_p,
                                      const CohomologyOptions& opts) {
  const RelativeComplex cx(h, m);
  const Computed k = compute(cx, max_p + 2, opts);
  std::vector<DdCheckRow> rows;
  for (std::size_t p = 0; p <= max_p; ++p) rows.push_back({p, composite_zero(k.D[p + 1], k.D[p])});
  return rows;
}

std::size_t default_degree(const SubalgebraSpan& h) {
  const auto& g = *h.parent();
  std::size_t h_even = 0;
  for (auto p : h.parities()) h_even += (p == Parity::even);
  return g.dim(Parity::odd) + (g.dim(Parity::even) - h_even);
}

}  // namespace supero

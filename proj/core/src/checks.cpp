#include "supero/checks.hpp"

#include <map>
#include <tuple>

#include "supero/error.hpp"
#include "supero/families.hpp"

namespace supero {

const char* to_string(EvenShape s) {
  switch (s) {
    case EvenShape::torus: return "torus";
    case EvenShape::borel: return "borel";
    case EvenShape::levi: return "levi";
    case EvenShape::parabolic: return "parabolic";
  }
  return "?";
}

SubalgebraSpan even_shape(const AlgebraPtr& g0, EvenShape shape, const std::optional<Functional>& H) {
  if (shape == EvenShape::torus) return torus_span(g0);
  const RootDatum rd = root_decomposition(g0);
  const Functional f = H ? *H : generic_functional(rd);
  if (shape == EvenShape::borel) {
    for (const auto& r : rd.roots) {
      if (f(r.weight).is_zero()) throw ParameterError("a Borel subalgebra needs H nonzero on every root");
    }
  }
  const auto P = principal_parabolic(rd, f);
  const auto& span = shape == EvenShape::levi ? P.levi : P.parabolic;
  return SubalgebraSpan(g0, span.vectors(), to_string(shape));
}

bool is_torus_stable_shape(const SubalgebraSpan& a) {
  const auto& g = *a.parent();
  for (auto t : g.torus()) {
    if (!a.contains(SparseVector::unit(t))) return false;
  }
  std::size_t inside = 0;
  for (std::size_t j = 0; j < g.dim(); ++j) inside += a.contains(SparseVector::unit(j));
  return inside == a.dim();
}

KunnethCheck kunneth_check(const AlgebraPtr& g, const SubalgebraSpan& a, std::size_t N, const CohomologyOptions& opts) {
  const AlgebraPtr g0 = even_part(g);
  if (a.parent() != g0 && !(*a.parent() == *g0)) {
    throw UnsupportedError("subalgebra must live in the even part of " + g->name());
  }
  if (!is_torus_stable_shape(a)) {
    throw UnsupportedError(a.label() + " is not a torus, Levi, Borel or parabolic subalgebra of the even part");
  }
  KunnethCheck k;
  k.algebra = g->name();
  k.subalgebra = a.label();
  const SubalgebraSpan lifted = lift_span(a, even_span(g), a.label());
  k.H_g_a = cohomology(lifted, trivial(g), N, opts).dims();
  k.H_g_g0 = cohomology(even_span(g), trivial(g), N, opts).dims();
  k.H_g0_a = cohomology(a, trivial(g0), N, opts).dims();
  for (std::size_t n = 0; n <= N; ++n) {
    KunnethRow row;
    row.n = n;
    row.lhs = k.H_g_a[n];
    for (std::size_t p = 0; p <= n; ++p) row.rhs += k.H_g_g0[p] * k.H_g0_a[n - p];
    row.pass = row.lhs == row.rhs;
    k.pass = k.pass && row.pass;
    k.rows.push_back(row);
  }
  return k;
}

ConcentrationCheck even_concentration_check(const AlgebraPtr& g0, const SubalgebraSpan& a, std::size_t N,
                                            const CohomologyOptions& opts) {
  if (!g0->is_purely_even()) throw ParameterError(g0->name() + " is not purely even");
  ConcentrationCheck c;
  c.algebra = g0->name();
  c.subalgebra = a.label();
  c.dims = cohomology(a, trivial(g0), N, opts).dims();
  for (std::size_t q = 1; q <= N; q += 2) {
    if (c.dims[q] != 0) c.odd_nonzero.push_back(q);
  }
  c.pass = c.odd_nonzero.empty();
  return c;
}

std::vector<Rational> GradingTorus::pair(std::span<const int> root) const {
  if (root.size() != coords.size()) throw DimensionError("root length must match the grading coordinates");
  std::vector<Rational> out(rank);
  for (std::size_t c = 0; c < coords.size(); ++c) {
    if (root[c] == 0) continue;
    for (std::size_t k = 0; k < rank; ++k) out[k] += Rational(root[c]) * values[c][k];
  }
  return out;
}

namespace {

struct Family {
  enum Kind { gl, q, pt, osp, d21a, g3, f4 } kind;
  int a = 0, b = 0;  // gl: m, n. q, pt: n. osp: k = floor(m/2), n, odd_m in c
  bool odd_m = false;
};

Family parse_family(const std::string& family, std::span<const int> params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) {
      throw ParameterError(family + " takes " + std::to_string(k) + " parameter(s)");
    }
  };
  if (family == "gl") {
    need(2);
    if (params[0] < 0 || params[1] < 0 || params[0] + params[1] == 0) throw ParameterError("empty algebra");
    return {Family::gl, params[0], params[1]};
  }
  if (family == "q") {
    need(1);
    if (params[0] < 1) throw ParameterError("q(n) needs n >= 1");
    return {Family::q, params[0], 0};
  }
  if (family == "pt") {
    need(1);
    if (params[0] < 2 || params[0] % 2 != 0) throw UnsupportedError("the pt(n) grading is implemented for even n >= 2");
    return {Family::pt, params[0], 0};
  }
  if (family == "osp") {
    need(2);
    if (params[0] < 1 || params[1] < 2 || params[1] % 2 != 0) throw ParameterError("osp(m|2n) needs m >= 1, n >= 1");
    return {Family::osp, params[0] / 2, params[1] / 2, params[0] % 2 == 1};
  }
  if (family == "D21a" || family == "G3" || family == "F4") {
    need(0);
    return {family == "D21a" ? Family::d21a : (family == "G3" ? Family::g3 : Family::f4)};
  }
  throw UnsupportedError("no grading data for family " + family);
}

IntRoot unit_root(std::size_t n, std::size_t i) {
  IntRoot r(n, 0);
  r[i] = 1;
  return r;
}

IntRoot root_of(std::size_t n, std::initializer_list<std::pair<std::size_t, int>> terms) {
  IntRoot r(n, 0);
  for (auto [i, c] : terms) r[i] += c;
  return r;
}

// Type A block e_i - e_j (i < j) on coordinates [off, off + len).
void type_a(std::vector<IntRoot>& out, std::size_t n, std::size_t off, std::size_t len, bool simple) {
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      if (simple && j != i + 1) continue;
      out.push_back(root_of(n, {{off + i, 1}, {off + j, -1}}));
    }
  }
}

std::vector<IntRoot> g2_roots(std::size_t n, std::size_t a1, std::size_t a2) {
  // alpha1 short, alpha2 long
  return {root_of(n, {{a1, 1}}),    root_of(n, {{a2, 1}}),          root_of(n, {{a1, 1}, {a2, 1}}),
          root_of(n, {{a1, 2}, {a2, 1}}), root_of(n, {{a1, 3}, {a2, 1}}), root_of(n, {{a1, 3}, {a2, 2}})};
}

std::vector<IntRoot> b3_roots(std::size_t n, std::size_t a1, std::size_t a2, std::size_t a3) {
  // alpha3 short
  return {root_of(n, {{a1, 1}}),
          root_of(n, {{a2, 1}}),
          root_of(n, {{a3, 1}}),
          root_of(n, {{a1, 1}, {a2, 1}}),
          root_of(n, {{a2, 1}, {a3, 1}}),
          root_of(n, {{a1, 1}, {a2, 1}, {a3, 1}}),
          root_of(n, {{a2, 1}, {a3, 2}}),
          root_of(n, {{a1, 1}, {a2, 1}, {a3, 2}}),
          root_of(n, {{a1, 1}, {a2, 2}, {a3, 2}})};
}

std::vector<IntRoot> even_roots(const Family& f, bool simple) {
  std::vector<IntRoot> out;
  switch (f.kind) {
    case Family::gl: {
      const auto n = static_cast<std::size_t>(f.a + f.b);
      type_a(out, n, 0, static_cast<std::size_t>(f.a), simple);
      type_a(out, n, static_cast<std::size_t>(f.a), static_cast<std::size_t>(f.b), simple);
      break;
    }
    case Family::q:
    case Family::pt: type_a(out, static_cast<std::size_t>(f.a), 0, static_cast<std::size_t>(f.a), simple); break;
    case Family::osp: {
      const auto k = static_cast<std::size_t>(f.a), m = static_cast<std::size_t>(f.b), n = k + m;
      // so(2k) or so(2k+1) on e_1..e_k
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          if (!simple || j == i + 1) out.push_back(root_of(n, {{i, 1}, {j, -1}}));
          if (!simple || (!f.odd_m && i + 2 == k && j + 1 == k)) out.push_back(root_of(n, {{i, 1}, {j, 1}}));
        }
        if (f.odd_m && (!simple || i + 1 == k)) out.push_back(unit_root(n, i));
      }
      // sp(2m) on d_1..d_m
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
          if (!simple || j == i + 1) out.push_back(root_of(n, {{k + i, 1}, {k + j, -1}}));
          if (!simple) out.push_back(root_of(n, {{k + i, 1}, {k + j, 1}}));
        }
        if (!simple || i + 1 == m) out.push_back(root_of(n, {{k + i, 2}}));
      }
      break;
    }
    case Family::d21a:
      for (std::size_t i = 0; i < 3; ++i) out.push_back(unit_root(3, i));
      break;
    case Family::g3:
      out.push_back(unit_root(3, 0));
      if (simple) {
        out.push_back(unit_root(3, 1));
        out.push_back(unit_root(3, 2));
      } else {
        for (auto& r : g2_roots(3, 1, 2)) out.push_back(r);
      }
      break;
    case Family::f4:
      out.push_back(unit_root(4, 0));
      if (simple) {
        for (std::size_t i = 1; i < 4; ++i) out.push_back(unit_root(4, i));
      } else {
        for (auto& r : b3_roots(4, 1, 2, 3)) out.push_back(r);
      }
      break;
  }
  return out;
}

std::string family_label(const std::string& family, std::span<const int> params) {
  if (family == "D21a") return "D(2,1;alpha)";
  if (family == "G3") return "G(3)";
  if (family == "F4") return "F(4)";
  if (family == "pt") return "pt(" + std::to_string(params[0]) + ")";
  if (family == "q") return "q(" + std::to_string(params[0]) + ")";
  return family + "(" + std::to_string(params[0]) + "|" + std::to_string(params[1]) + ")";
}

}  // namespace

GradingTorus appendix_torus(const std::string& family, std::span<const int> params) {
  const Family f = parse_family(family, params);
  GradingTorus gt;
  gt.family = family_label(family, params);
  auto add = [&](std::string name, std::vector<Rational> v) {
    gt.coords.push_back(std::move(name));
    gt.values.push_back(std::move(v));
  };
  auto descending = [&](const std::string& prefix, int len) {
    // len+1-2i: step 2, centred at zero
    for (int i = 1; i <= len; ++i) add(prefix + std::to_string(i), {Rational(len + 1 - 2 * i)});
  };
  switch (f.kind) {
    case Family::gl:
      descending("e", f.a);
      descending("d", f.b);
      break;
    case Family::q: descending("e", f.a); break;
    case Family::pt:
      // n/2, ..., 1, -1, ..., -n/2
      for (int i = 1; i <= f.a; ++i) {
        const int h = f.a / 2;
        add("e" + std::to_string(i), {Rational(i <= h ? h + 1 - i : h - i)});
      }
      break;
    case Family::osp:
      for (int j = 1; j <= f.a; ++j) add("e" + std::to_string(j), {Rational(f.a + 1 - j)});
      for (int j = 1; j <= f.b; ++j) add("d" + std::to_string(j), {Rational(f.b + 1 - j)});
      break;
    case Family::d21a:
      gt.rank = 2;
      gt.abstract = true;
      add("a1", {Rational(2), Rational(0)});
      add("a2", {Rational(0), Rational(2)});
      add("a3", {Rational(2), Rational(2)});
      break;
    case Family::g3:
      gt.rank = 2;
      gt.abstract = true;
      add("a", {Rational(0), Rational(2)});
      add("a1", {Rational(1), Rational(0)});
      add("a2", {Rational(0), Rational(1)});
      break;
    case Family::f4:
      // same shape as G(3): the sl2 root feeds the second factor twice
      gt.rank = 2;
      gt.abstract = true;
      add("a", {Rational(0), Rational(2)});
      add("a1", {Rational(1), Rational(0)});
      add("a2", {Rational(1), Rational(0)});
      add("a3", {Rational(0), Rational(1)});
      break;
  }
  return gt;
}

std::vector<IntRoot> positive_even_roots(const std::string& family, std::span<const int> params) {
  return even_roots(parse_family(family, params), false);
}

std::vector<IntRoot> simple_even_roots(const std::string& family, std::span<const int> params) {
  return even_roots(parse_family(family, params), true);
}

AbstractRootData abstract_root_data(const std::string& family) {
  if (family != "D21a" && family != "G3" && family != "F4") {
    throw UnsupportedError(family + " has a matrix model; abstract data is only kept for D21a, G3, F4");
  }
  AbstractRootData d;
  d.family = family_label(family, {});
  d.grading = appendix_torus(family, {});
  d.coords = d.grading.coords;
  d.positive_even_roots = positive_even_roots(family, {});
  return d;
}

GradingCheck check_positive_grading(const GradingTorus& gt, const std::vector<IntRoot>& roots) {
  for (const auto& r : roots) {
    const auto v = gt.pair(r);
    bool ok = false;
    if (gt.rank == 1) {
      ok = v[0].sign() > 0;
    } else {
      bool nonneg = true, nonzero = false;
      for (const auto& x : v) {
        nonneg = nonneg && x.sign() >= 0;
        nonzero = nonzero || !x.is_zero();
      }
      ok = nonneg && nonzero;
    }
    if (!ok) return {false, r, "root does not pair positively with t"};
  }
  return {};
}

namespace {

Rational total(const std::vector<Rational>& v) {
  Rational s;
  for (const auto& x : v) s += x;
  return s;
}

class MonomialCounter {
 public:
  explicit MonomialCounter(std::vector<std::vector<Rational>> values) : values_(std::move(values)) {}

  mpz_class count(std::size_t k, const std::vector<Rational>& rem, std::size_t deg) {
    for (const auto& x : rem) {
      if (x.sign() < 0) return 0;
    }
    if (k == values_.size()) {
      for (const auto& x : rem) {
        if (!x.is_zero()) return 0;
      }
      return 1;
    }
    auto key = std::make_tuple(k, rem, deg);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    mpz_class out = 0;
    std::vector<Rational> r = rem;
    for (std::size_t c = 0; c <= deg; ++c) {
      bool neg = false;
      for (const auto& x : r) neg = neg || x.sign() < 0;
      if (neg) break;
      out += count(k + 1, r, deg - c);
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= values_[k][i];
    }
    memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  std::vector<std::vector<Rational>> values_;
  std::map<std::tuple<std::size_t, std::vector<Rational>, std::size_t>, mpz_class> memo_;
};

}  // namespace

MonomialCount count_graded_monomials(const GradingTorus& gt, const std::vector<IntRoot>& roots,
                                     const std::vector<Rational>& target, std::size_t cap) {
  if (target.size() != gt.rank) throw DimensionError("target must have one entry per grading parameter");
  const auto positive = check_positive_grading(gt, roots);
  if (!positive.pass) throw ParameterError("grading is not positive on the roots; the count need not be finite");
  MonomialCount out;
  out.cap = cap;
  std::vector<std::vector<Rational>> values;
  for (const auto& r : roots) {
    values.push_back(gt.pair(r));
    const Rational t = total(values.back());
    if (out.epsilon.is_zero() || t < out.epsilon) out.epsilon = t;
  }
  bool negative = false;
  for (const auto& x : target) negative = negative || x.sign() < 0;
  if (!out.epsilon.is_zero() && !negative) {
    const mpq_class q = total(target).raw() / out.epsilon.raw();
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    out.degree_bound = c.get_ui();
  }
  MonomialCounter counter(values);
  out.count = counter.count(0, target, cap);
  const mpz_class beyond = counter.count(0, target, std::max(cap, out.degree_bound) + 1);
  out.stable = cap >= out.degree_bound && beyond == out.count;
  return out;
}

}  // namespace supero

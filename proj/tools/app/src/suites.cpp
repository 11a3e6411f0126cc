#include "supero/app/suites.hpp"

#include <algorithm>
#include <random>

#include "supero/app/jobs.hpp"
#include "supero/checks.hpp"
#include "supero/error.hpp"
#include "supero/families.hpp"
#include "supero/invariants.hpp"

namespace supero::app {

namespace {

std::string join(const std::vector<int>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

AlgebraPtr build(const FamilySpec& f) { return build_family(f.family, f.params); }

ConformanceRow axiom_row(const std::string& check, const AlgebraPtr& g, const AxiomCheck& c) {
  ConformanceRow r{check, g->name(), "", c.pass, nullptr};
  if (!c.pass) r.witness = Json{{"basis", c.witness}, {"detail", c.detail}};
  return r;
}

std::vector<ConformanceRow> jacobi_suite() {
  std::vector<ConformanceRow> rows;
  for (const auto& f : axiom_matrix()) {
    const auto g = build(f);
    rows.push_back(axiom_row("super-jacobi", g, check_super_jacobi(*g)));
    rows.push_back(axiom_row("antisymmetry", g, check_super_antisymmetry(*g)));
    rows.push_back(axiom_row("parity", g, check_parity_consistency(*g)));
    rows.push_back(axiom_row("torus", g, check_torus(*g)));
  }
  return rows;
}

/// Integer entries in [-3, 3], fixed seed so the suite output is reproducible.
Functional random_functional(std::mt19937& rng, std::size_t rank) {
  std::uniform_int_distribution<int> d(-3, 3);
  Functional f;
  for (std::size_t i = 0; i < rank; ++i) f.values.emplace_back(d(rng));
  return f;
}

std::string functional_text(const Functional& f) {
  std::string s;
  for (std::size_t i = 0; i < f.values.size(); ++i) s += (i ? "," : "") + f.values[i].str();
  return s;
}

std::vector<ConformanceRow> ddzero_suite(const CohomologyOptions& opts) {
  std::vector<ConformanceRow> rows;
  std::mt19937 rng(20240611);
  for (const auto& f : complex_matrix()) {
    const auto g = build(f);
    const Functional H = random_functional(rng, g->torus().size());
    std::vector<std::pair<std::string, SubalgebraSpan>> subs;
    subs.emplace_back("g0", even_span(g));
    subs.emplace_back("torus", torus_span(g));
    subs.emplace_back("levi[H=" + functional_text(H) + "]", parse_subalgebra(g, "levi", H));
    subs.emplace_back("borel", parse_subalgebra(g, "borel", std::nullopt));
    for (const auto& [hname, h] : subs) {
      for (const std::string mod : {"trivial", "natural", "adjoint"}) {
        const auto dd = check_dd_zero(h, parse_module(g, mod), 4, opts);
        ConformanceRow r{"ddzero", g->name(), "h=" + hname + " m=" + mod + " p<=4", true, nullptr};
        for (const auto& row : dd) {
          if (!row.zero) {
            r.pass = false;
            r.witness = Json{{"p", row.p}};
            break;
          }
        }
        rows.push_back(std::move(r));
      }
    }
  }
  return rows;
}

std::vector<ConformanceRow> g0_vanishing_suite(const CohomologyOptions& opts) {
  std::vector<ConformanceRow> rows;
  const std::vector<FamilySpec> fams{{"gl", {1, 1}}, {"gl", {2, 1}}, {"q", {2}}, {"pt", {2}}, {"osp", {1, 2}}};
  const std::size_t N = 6;
  for (const auto& f : fams) {
    const auto g = build(f);
    const auto c = compare_invariants_vs_cohomology(g, N, opts);
    rows.push_back({"differentials-zero", g->name(), "h=g0 m=trivial p<=6", c.differentials_zero, nullptr});
    ConformanceRow r{"dimH-equals-invariants", g->name(), "j<=6", c.pass, nullptr};
    r.witness = Json{{"invariants", c.invariants}, {"cohomology", c.cohomology}};
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ConformanceRow> invariants_suite(const CohomologyOptions& opts) {
  std::vector<ConformanceRow> rows;
  const std::vector<FamilySpec> fams{{"gl", {1, 1}}, {"gl", {2, 1}}, {"gl", {2, 2}}, {"sl", {2, 1}},
                                     {"q", {2}},     {"q", {3}},     {"pt", {2}},    {"pt", {3}},
                                     {"p", {3}},     {"osp", {1, 2}}, {"osp", {2, 2}}, {"osp", {3, 2}},
                                     {"gl", {2, 0}}};
  for (const auto& f : fams) {
    const auto g = build(f);
    const auto c = compare_invariants_vs_cohomology(g, 4, opts);
    ConformanceRow r{"invariants-vs-cohomology", g->name(), "j<=4", c.pass, nullptr};
    r.witness = Json{{"invariants", c.invariants}, {"cohomology", c.cohomology}};
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ConformanceRow> kunneth_suite(const CohomologyOptions& opts) {
  std::vector<ConformanceRow> rows;
  for (const FamilySpec& f : std::vector<FamilySpec>{{"gl", {1, 1}}, {"gl", {2, 1}}, {"q", {2}}}) {
    const auto g = build(f);
    const auto g0 = even_part(g);
    for (auto shape : {EvenShape::torus, EvenShape::borel, EvenShape::levi}) {
      const auto k = kunneth_check(g, even_shape(g0, shape), 4, opts);
      ConformanceRow r{"kunneth", g->name(), std::string("a=") + to_string(shape) + " n<=4", k.pass, nullptr};
      r.witness = Json{{"H(g,a)", k.H_g_a}, {"H(g,g0)", k.H_g_g0}, {"H(g0,a)", k.H_g0_a}};
      rows.push_back(std::move(r));
    }
  }
  const std::vector<std::pair<std::string, AlgebraPtr>> evens{
      {"sl2", build_sl(2, 0)}, {"sl3", build_sl(3, 0)}, {"gl2+gl1", even_part(build_gl(2, 1))}};
  for (const auto& [name, g0] : evens) {
    for (auto shape : {EvenShape::borel, EvenShape::levi}) {
      const auto c = even_concentration_check(g0, even_shape(g0, shape), 4, opts);
      ConformanceRow r{"even-concentration", name, std::string("a=") + to_string(shape) + " q<=4", c.pass, nullptr};
      r.witness = Json{{"dims", c.dims}};
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

Json root_json(const IntRoot& r) { return Json(r); }

/// Even roots of the matrix model, as integer vectors in torus coordinates.
std::vector<IntRoot> model_even_roots(const AlgebraPtr& g) {
  std::vector<IntRoot> out;
  for (const auto& s : root_decomposition(g).roots) {
    if (s.even_mult == 0) continue;
    IntRoot r;
    for (const auto& c : s.weight.coords) {
      if (!c.is_integer()) throw ConventionError("non-integral root in " + g->name());
      r.push_back(static_cast<int>(c.num().get_si()));
    }
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ConformanceRow> appendix_suite() {
  std::vector<ConformanceRow> rows;
  std::mt19937 rng(20240612);
  for (const auto& f : grading_matrix()) {
    const auto gt = appendix_torus(f.family, f.params);
    const auto roots = positive_even_roots(f.family, f.params);
    const std::string params = join(f.params);
    const auto pos = check_positive_grading(gt, roots);
    ConformanceRow r{"positive-grading", gt.family, gt.abstract ? "abstract" : params, pos.pass, nullptr};
    if (pos.witness) r.witness = Json{{"root", root_json(*pos.witness)}};
    rows.push_back(std::move(r));

    if (!gt.abstract) {
      // the hand-written root list must be the positive half of the model's even roots
      std::vector<IntRoot> listed;
      for (const auto& x : roots) {
        listed.push_back(x);
        IntRoot neg = x;
        for (auto& c : neg) c = -c;
        listed.push_back(neg);
      }
      std::sort(listed.begin(), listed.end());
      const auto model = model_even_roots(build(f));
      rows.push_back({"roots-match-model", gt.family, params, listed == model, nullptr});
    }

    const auto simple = simple_even_roots(f.family, f.params);
    if (f.family == "gl" && f.params[0] == f.params[1]) {
      bool all_two = true;
      Json values = Json::array();
      for (const auto& s : simple) {
        const auto v = gt.pair(s)[0];
        values.push_back(to_json(v));
        all_two = all_two && v == Rational(2);
      }
      ConformanceRow t{"simple-roots-value-2", gt.family, params, all_two, nullptr};
      t.witness = Json{{"values", values}};
      rows.push_back(std::move(t));
    }
    if (f.family == "osp" && f.params[0] % 2 == 1 && f.params[0] == f.params[1] + 1) {
      // e_j - e_{j+1}, e_n, d_j - d_{j+1} -> 1 and 2 d_n -> 2
      bool ok = true;
      Json values = Json::array();
      for (const auto& s : simple) {
        const auto v = gt.pair(s)[0];
        values.push_back(to_json(v));
        int twos = 0;
        for (auto c : s) twos += (c == 2);
        ok = ok && v == Rational(twos ? 2 : 1);
      }
      ConformanceRow t{"osp-1112-pattern", gt.family, params, ok, nullptr};
      t.witness = Json{{"values", values}};
      rows.push_back(std::move(t));
    }

    if (!pos.pass) continue;
    std::uniform_int_distribution<std::size_t> pick(0, roots.empty() ? 0 : roots.size() - 1);
    std::uniform_int_distribution<int> len(0, 4);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Rational> target(gt.rank);
      const int k = len(rng);
      for (int i = 0; i < k && !roots.empty(); ++i) {
        const auto v = gt.pair(roots[pick(rng)]);
        for (std::size_t c = 0; c < gt.rank; ++c) target[c] += v[c];
      }
      const auto mc = count_graded_monomials(gt, roots, target, 0);
      const auto at_bound = count_graded_monomials(gt, roots, target, mc.degree_bound);
      ConformanceRow t{"count-stability", gt.family, params + " trial=" + std::to_string(trial), at_bound.stable,
                       nullptr};
      Json tj = Json::array();
      for (const auto& x : target) tj.push_back(to_json(x));
      t.witness = Json{{"target", tj}, {"count", at_bound.count.get_str()}, {"degree_bound", at_bound.degree_bound}};
      rows.push_back(std::move(t));
    }
  }
  return rows;
}

std::vector<ConformanceRow> growth_suite(const CohomologyOptions& opts) {
  std::vector<ConformanceRow> rows;
  const std::vector<FamilySpec> fams{{"gl", {1, 1}}, {"gl", {2, 1}}, {"q", {2}},    {"pt", {2}},
                                     {"osp", {1, 2}}, {"sl", {2, 0}}, {"gl", {2, 0}}};
  for (const auto& f : fams) {
    const auto g = build(f);
    for (const std::string sub : {"g0", "levi"}) {
      const auto h = parse_subalgebra(g, sub, std::nullopt);
      for (const std::string mod : {"trivial", "natural"}) {
        const auto m = parse_module(g, mod);
        const auto est = ext_growth(h, m, m, 8, opts);
        bool ok = est.within_bound;
        if (g->is_purely_even()) ok = ok && est.eventually_zero;
        ConformanceRow r{"growth-within-bound", g->name(), "h=" + sub + " m=n=" + mod + " N=8", ok, nullptr};
        r.witness = to_json(est);
        rows.push_back(std::move(r));
      }
    }
  }
  return rows;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"jacobi",  "ddzero",   "g0-vanishing", "invariants",
                                              "kunneth", "appendix", "growth"};
  return names;
}

std::vector<FamilySpec> axiom_matrix() {
  std::vector<FamilySpec> out;
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      if (m + n > 0) out.push_back({"gl", {m, n}});
    }
  }
  out.push_back({"sl", {2, 1}});
  for (int n = 1; n <= 3; ++n) out.push_back({"q", {n}});
  out.push_back({"pt", {2}});
  out.push_back({"osp", {1, 2}});
  out.push_back({"osp", {2, 2}});
  out.push_back({"osp", {3, 2}});
  return out;
}

std::vector<FamilySpec> complex_matrix() {
  return {{"gl", {1, 1}}, {"gl", {2, 1}}, {"gl", {2, 2}}, {"sl", {2, 1}}, {"q", {2}},     {"q", {3}},
          {"pt", {2}},    {"pt", {3}},    {"osp", {1, 2}}, {"osp", {2, 2}}, {"osp", {3, 2}}};
}

std::vector<FamilySpec> grading_matrix() {
  std::vector<FamilySpec> out;
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      if (m + n > 0) out.push_back({"gl", {m, n}});
    }
  }
  for (int n = 1; n <= 3; ++n) out.push_back({"q", {n}});
  out.push_back({"pt", {2}});
  out.push_back({"osp", {3, 2}});
  out.push_back({"osp", {5, 4}});
  out.push_back({"osp", {4, 4}});
  out.push_back({"D21a", {}});
  out.push_back({"G3", {}});
  out.push_back({"F4", {}});
  return out;
}

std::vector<ConformanceRow> run_suite(const std::string& suite, const CohomologyOptions& opts) {
  if (suite == "jacobi") return jacobi_suite();
  if (suite == "ddzero") return ddzero_suite(opts);
  if (suite == "g0-vanishing") return g0_vanishing_suite(opts);
  if (suite == "invariants") return invariants_suite(opts);
  if (suite == "kunneth") return kunneth_suite(opts);
  if (suite == "appendix") return appendix_suite();
  if (suite == "growth") return growth_suite(opts);
  throw ParameterError("unknown suite '" + suite + "'");
}

}  // namespace supero::app

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails. Optional argument: path to the supero executable,
// used by criterion 10 to compare separate process runs.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "supero/app/cli.hpp"
#include "supero/app/jobs.hpp"
#include "supero/app/suites.hpp"
#include "supero/checks.hpp"
#include "supero/families.hpp"
#include "supero/invariants.hpp"

using namespace supero;

namespace {

// Wall-clock limits in seconds; 0 means untimed.
constexpr double kLimitAxioms = 10.0;
constexpr double kLimitDdZero = 300.0;
constexpr double kLimitKunneth = 600.0;

using Dims = std::vector<std::size_t>;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit;
  std::function<Outcome()> run;
};

std::string str(const Dims& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s;
}

AlgebraPtr build(const std::string& f, std::vector<int> p) { return build_family(f, p); }

Outcome axioms() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& f : app::axiom_matrix()) {
    const auto g = build(f.family, f.params);
    ++n;
    if (!check_super_jacobi(*g).pass || !check_super_antisymmetry(*g).pass) {
      o.pass = false;
      o.detail += g->name() + " ";
    }
  }
  if (o.pass) o.detail = std::to_string(n) + " algebras";
  return o;
}

Outcome ddzero() {
  const auto rows = app::run_suite("ddzero");
  Outcome o;
  std::size_t ok = 0;
  for (const auto& r : rows) {
    ok += r.pass;
    if (!r.pass) o.detail += r.family + " " + r.params + "; ";
  }
  const std::size_t expected = app::complex_matrix().size() * 4 * 3;
  o.pass = ok == rows.size() && rows.size() == expected;
  o.detail = std::to_string(ok) + "/" + std::to_string(rows.size()) + " (g,h,m) triples, p<=4 " + o.detail;
  return o;
}

Outcome g0_vanishing() {
  Outcome o;
  std::size_t mismatches = 0;
  for (const auto& [f, p] : std::vector<std::pair<std::string, std::vector<int>>>{
           {"gl", {1, 1}}, {"gl", {2, 1}}, {"q", {2}}, {"pt", {2}}, {"osp", {1, 2}}}) {
    const auto g = build(f, p);
    const auto rep = cohomology(even_span(g), trivial(g), 6);
    const auto inv = invariant_dims(g, 6).dims;
    if (!rep.all_differentials_zero) {
      o.pass = false;
      o.detail += g->name() + ": nonzero differential; ";
    }
    for (std::size_t j = 0; j <= 6; ++j) mismatches += rep.dims()[j] != inv[j];
  }
  if (mismatches) o.pass = false;
  o.detail += std::to_string(mismatches) + " mismatches";
  return o;
}

Outcome gl11_table() {
  const auto g = build("gl", {1, 1});
  const auto engine = cohomology(even_span(g), trivial(g), 6).dims();
  const auto brute = oracle::gl11_weight_zero_monomials(6);
  const Dims expected{1, 0, 1, 0, 1, 0, 1};
  return {engine == brute && brute == expected, "engine " + str(engine) + ", oracle " + str(brute)};
}

Outcome q2_hilbert() {
  Dims series;
  for (std::size_t j = 0; j <= 6; ++j) series.push_back(j / 2 + 1);  // 1/((1-t)(1-t^2))
  const auto brute = oracle::q2_coadjoint_invariants(6);
  const auto lib = invariant_dims(build("q", {2}), 6).dims;
  return {lib == brute && brute == series, "library " + str(lib) + ", oracle " + str(brute)};
}

Outcome kunneth() {
  Outcome o;
  std::size_t rows = 0, bad = 0;
  for (const auto& [f, p] :
       std::vector<std::pair<std::string, std::vector<int>>>{{"gl", {1, 1}}, {"gl", {2, 1}}, {"q", {2}}}) {
    const auto g = build(f, p);
    const auto g0 = even_part(g);
    for (auto shape : {EvenShape::torus, EvenShape::borel, EvenShape::levi}) {
      const auto k = kunneth_check(g, even_shape(g0, shape), 4);
      for (const auto& r : k.rows) {
        ++rows;
        if (!r.pass) {
          ++bad;
          o.detail += g->name() + "/" + to_string(shape) + " n=" + std::to_string(r.n) + "; ";
        }
      }
    }
  }
  o.pass = bad == 0;
  o.detail = std::to_string(rows - bad) + "/" + std::to_string(rows) + " degrees " + o.detail;
  return o;
}

Outcome concentration() {
  Outcome o;
  const std::vector<AlgebraPtr> evens{build("sl", {2, 0}), build("sl", {3, 0}), even_part(build("gl", {2, 1}))};
  for (const auto& g0 : evens) {
    const auto c = even_concentration_check(g0, even_shape(g0, EvenShape::borel), 4);
    if (!c.pass) {
      o.pass = false;
      o.detail += g0->name() + " " + str(c.dims) + "; ";
    }
  }
  const auto sl2 = build("sl", {2, 0});
  const auto t = cohomology(torus_span(sl2), trivial(sl2), 2).dims();
  if (t != oracle::sl2_torus_cohomology()) o.pass = false;
  o.detail += "(sl2, torus) = " + str(t);
  return o;
}

Outcome gradings() {
  Outcome o;
  std::mt19937 rng(90210);
  std::size_t families = 0, targets = 0;
  for (const auto& f : app::grading_matrix()) {
    ++families;
    const auto gt = appendix_torus(f.family, f.params);
    const auto roots = positive_even_roots(f.family, f.params);
    auto fail = [&](const std::string& why) {
      o.pass = false;
      o.detail += gt.family + ": " + why + "; ";
    };
    if (!check_positive_grading(gt, roots).pass) fail("not positive");
    const auto simple = simple_even_roots(f.family, f.params);
    if (f.family == "gl" && f.params[0] == f.params[1]) {
      for (const auto& s : simple)
        if (gt.pair(s)[0] != Rational(2)) fail("simple root value != 2");
    }
    if (f.family == "osp" && f.params[0] == f.params[1] + 1) {
      for (const auto& s : simple) {
        const bool doubled = std::find(s.begin(), s.end(), 2) != s.end();
        if (gt.pair(s)[0] != Rational(doubled ? 2 : 1)) fail("(1,1,1,2) pattern broken");
      }
    }
    std::vector<std::vector<mpq_class>> vals;
    for (const auto& r : roots) {
      std::vector<mpq_class> v;
      for (const auto& x : gt.pair(r)) v.push_back(x.raw());
      vals.push_back(v);
    }
    std::uniform_int_distribution<std::size_t> pick(0, roots.empty() ? 0 : roots.size() - 1);
    for (int trial = 0; trial < 10; ++trial, ++targets) {
      std::vector<Rational> target(gt.rank);
      for (int k = static_cast<int>(rng() % 4); k > 0 && !roots.empty(); --k) {
        const auto v = gt.pair(roots[pick(rng)]);
        for (std::size_t c = 0; c < gt.rank; ++c) target[c] += v[c];
      }
      const auto bound = count_graded_monomials(gt, roots, target, 0).degree_bound;
      const auto at = count_graded_monomials(gt, roots, target, bound);
      std::vector<mpq_class> tq;
      for (const auto& x : target) tq.push_back(x.raw());
      if (!at.stable) fail("count not stable");
      if (at.count != oracle::count_monomials_brute(vals, tq, bound)) fail("count differs from enumeration");
    }
  }
  o.detail = std::to_string(families) + " families, " + std::to_string(targets) + " targets " + o.detail;
  return o;
}

Outcome growth() {
  Outcome o;
  std::size_t rows = 0;
  for (const auto& [f, p] : std::vector<std::pair<std::string, std::vector<int>>>{
           {"gl", {1, 1}}, {"gl", {2, 1}}, {"q", {2}}, {"pt", {2}}, {"osp", {1, 2}}, {"sl", {2, 0}}, {"gl", {2, 0}}}) {
    const auto g = build(f, p);
    for (const std::string sub : {"g0", "levi"}) {
      const auto h = app::parse_subalgebra(g, sub, std::nullopt);
      for (auto m : {trivial(g), natural(g)}) {
        ++rows;
        const auto est = ext_growth(h, m, m, 8);
        const bool ok = est.within_bound && (!g->is_purely_even() || est.eventually_zero);
        if (!ok) {
          o.pass = false;
          o.detail += est.label + " rate " + std::to_string(est.estimated_rate) + "; ";
        }
      }
    }
  }
  o.detail = std::to_string(rows) + " Ext sequences, N=8 " + o.detail;
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

Outcome determinism(const std::string& exe) {
  Outcome o;
  for (const auto& suite : app::suite_names()) {
    std::string runs[2];
    for (int k = 0; k < 2; ++k) {
      if (exe.empty()) {
        std::ostringstream out, err;
        if (app::run({"verify", suite, "--format", "json"}, out, err) != 0) o.pass = false;
        runs[k] = out.str();
      } else {
        const std::string path = "supero_determinism_" + suite + std::to_string(k) + ".json";
        const std::string cmd = "\"" + exe + "\" verify " + suite + " --format json --out " + path;
        if (std::system(cmd.c_str()) != 0) o.pass = false;
        runs[k] = slurp(path);
        std::remove(path.c_str());
      }
    }
    if (runs[0].empty() || runs[0] != runs[1]) {
      o.pass = false;
      o.detail += suite + " differs; ";
    }
  }
  o.detail += std::to_string(app::suite_names().size()) + " suites run twice" +
              (exe.empty() ? " in-process" : " as separate processes");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string exe = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria{
      {1, "super-Jacobi and antisymmetry", kLimitAxioms, axioms},
      {2, "d o d = 0 on the (g, h, m) matrix", kLimitDdZero, ddzero},
      {3, "h = g0, M = C: zero differentials, dim H = invariants", 0, g0_vanishing},
      {4, "gl(1|1) table H^j(g, g0, C)", 0, gl11_table},
      {5, "q(2) invariant Hilbert table", 0, q2_hilbert},
      {6, "Kunneth factorization", kLimitKunneth, kunneth},
      {7, "even-degree concentration", 0, concentration},
      {8, "torus gradings and monomial counts", 0, gradings},
      {9, "Ext growth within dim g_1", 0, growth},
      {10, "byte-identical verify output", 0, [&] { return determinism(exe); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0 && secs >= c.limit) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit)) + " s limit)";
    }
    failed += !o.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " -- " << o.detail << " ["
              << timing << "]" << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass"
            << std::endl;
  return failed == 0 ? 0 : 1;
}

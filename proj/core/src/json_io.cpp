#include "supero/json_io.hpp"

#include "supero/error.hpp"

namespace supero {

namespace {

Json big_int(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

std::string int_text(const Json& j) {
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  if (j.is_string()) return j.get<std::string>();
  throw FormatError("expected an integer");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Parity parity_from_json(const Json& j) {
  const auto s = j.get<std::string>();
  if (s == "even") return Parity::even;
  if (s == "odd") return Parity::odd;
  throw FormatError("parity must be 'even' or 'odd'");
}

Json to_json(const SparseMatrix& m) {
  Json entries = Json::array();
  for (const auto& t : m.triplets()) entries.push_back(Json::array({t.row, t.col, to_json(t.value)}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

SparseMatrix matrix_from_json(const Json& j) {
  std::vector<Triplet> ts;
  for (const auto& e : field(j, "entries")) {
    if (!e.is_array() || e.size() != 3) throw FormatError("matrix entry must be [row, col, value]");
    ts.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(), rational_from_json(e[2])});
  }
  return SparseMatrix::from_triplets(field(j, "rows").get<std::size_t>(), field(j, "cols").get<std::size_t>(),
                                     std::move(ts));
}

Json parities_json(const std::vector<Parity>& ps) {
  Json a = Json::array();
  for (auto p : ps) a.push_back(to_string(p));
  return a;
}

std::vector<Parity> parities_from_json(const Json& j) {
  std::vector<Parity> out;
  for (const auto& p : j) out.push_back(parity_from_json(p));
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return Json::array({big_int(r.num()), big_int(r.den())}); }

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("rational must be [num, den]");
  try {
    return Rational::from_strings(int_text(j[0]), int_text(j[1]));
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(std::string("bad rational: ") + e.what());
  }
}

Json to_json(const SparseVector& v) {
  Json a = Json::array();
  for (const auto& e : v) a.push_back(Json::array({e.index, to_json(e.value)}));
  return a;
}

SparseVector sparse_vector_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("vector must be an array of [index, value]");
  std::vector<SparseEntry> es;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw FormatError("vector entry must be [index, value]");
    es.push_back({e[0].get<std::size_t>(), rational_from_json(e[1])});
  }
  return SparseVector::from_entries(std::move(es));
}

Json to_json(const LieSuperalgebra& g) {
  Json brackets = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      for (const auto& e : g.bracket_basis(i, j)) brackets.push_back(Json::array({i, j, e.index, to_json(e.value)}));
    }
  }
  Json out{{"name", g.name()},
           {"dim", g.dim()},
           {"dim_even", g.dim(Parity::even)},
           {"dim_odd", g.dim(Parity::odd)},
           {"parities", parities_json(g.parities())},
           {"brackets", std::move(brackets)},
           {"torus", g.torus()}};
  if (const auto& real = g.realization()) {
    Json ms = Json::array();
    for (const auto& m : real->matrices) ms.push_back(to_json(m));
    out["realization"] = Json{{"size", real->size}, {"slot_parity", parities_json(real->slot_parity)},
                              {"matrices", std::move(ms)}};
  }
  return out;
}

LieSuperalgebra algebra_from_json(const Json& j) {
  if (j.contains("schema") && j.at("schema") != kSchema) throw FormatError("unknown schema " + j.at("schema").dump());
  try {
    auto parities = parities_from_json(field(j, "parities"));
    const std::size_t n = parities.size();
    std::vector<std::vector<SparseEntry>> cells(n * n);
    for (const auto& b : field(j, "brackets")) {
      if (!b.is_array() || b.size() != 4) throw FormatError("bracket entry must be [i, j, k, value]");
      const auto i = b[0].get<std::size_t>(), k = b[1].get<std::size_t>(), t = b[2].get<std::size_t>();
      if (i >= n || k >= n || t >= n) throw FormatError("bracket index out of range");
      cells[i * n + k].push_back({t, rational_from_json(b[3])});
    }
    std::vector<SparseVector> table;
    for (auto& c : cells) table.push_back(SparseVector::from_entries(std::move(c)));
    std::optional<MatrixRealization> real;
    if (j.contains("realization")) {
      const auto& r = j.at("realization");
      MatrixRealization mr;
      mr.size = field(r, "size").get<std::size_t>();
      mr.slot_parity = parities_from_json(field(r, "slot_parity"));
      for (const auto& m : field(r, "matrices")) mr.matrices.push_back(matrix_from_json(m));
      real = std::move(mr);
    }
    return LieSuperalgebra(field(j, "name").get<std::string>(), std::move(parities), std::move(table),
                           field(j, "torus").get<std::vector<std::size_t>>(), std::move(real));
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed algebra JSON: ") + e.what());
  }
}

Json to_json(const SubalgebraSpan& h) {
  Json vs = Json::array();
  for (const auto& v : h.vectors()) vs.push_back(to_json(v));
  return Json{{"label", h.label()}, {"algebra", h.parent()->name()}, {"dim", h.dim()}, {"vectors", std::move(vs)}};
}

SubalgebraSpan span_from_json(const AlgebraPtr& parent, const Json& j) {
  try {
    std::vector<SparseVector> vs;
    for (const auto& v : field(j, "vectors")) vs.push_back(sparse_vector_from_json(v));
    const std::string label = j.contains("label") ? j.at("label").get<std::string>() : std::string("file");
    return SubalgebraSpan(parent, std::move(vs), label);
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed subalgebra JSON: ") + e.what());
  }
}

Json to_json(const Weight& w) {
  Json a = Json::array();
  for (const auto& c : w.coords) a.push_back(to_json(c));
  return a;
}

Json to_json(const RootDatum& rd) {
  Json roots = Json::array();
  for (const auto& r : rd.roots) {
    roots.push_back(Json{{"weight", to_json(r.weight)},
                         {"even_mult", r.even_mult},
                         {"odd_mult", r.odd_mult},
                         {"basis", r.basis}});
  }
  return Json{{"algebra", rd.algebra->name()},
              {"rank", rd.rank()},
              {"zero_weight", rd.zero_weight},
              {"roots", std::move(roots)},
              {"symmetric", rd.symmetric()}};
}

Json to_json(const ParabolicDecomposition& p) {
  Json H = Json::array();
  for (const auto& v : p.H.values) H.push_back(to_json(v));
  auto basis_of = [](const SubalgebraSpan& s) {
    Json a = Json::array();
    for (const auto& v : s.vectors()) a.push_back(v.leading_index());
    return a;
  };
  return Json{{"H", std::move(H)},
              {"phi_plus", p.phi_plus},
              {"phi_zero", p.phi_zero},
              {"phi_minus", p.phi_minus},
              {"n_plus", basis_of(p.n_plus)},
              {"levi", basis_of(p.levi)},
              {"n_minus", basis_of(p.n_minus)},
              {"parabolic", basis_of(p.parabolic)}};
}

Json to_json(const CohomologyReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"p", row.p},
                        {"dimC_even", row.dimC_even},
                        {"dimC_odd", row.dimC_odd},
                        {"rank_d", row.rank_d()},
                        {"dimH_even", row.dimH_even},
                        {"dimH_odd", row.dimH_odd}});
  }
  return Json{{"algebra", r.algebra},
              {"subalgebra", r.subalgebra},
              {"module", r.module},
              {"N", r.N},
              {"rows", std::move(rows)},
              {"dims", r.dims()},
              {"all_differentials_zero", r.all_differentials_zero}};
}

Json to_json(const HilbertTable& t) { return Json{{"dims", t.dims}}; }

Json to_json(const GrowthEstimate& g) {
  return Json{{"label", g.label},
              {"window", Json::array({g.window_start, g.window_end})},
              {"dims", g.dims},
              {"estimated_rate", g.estimated_rate},
              {"heuristic", true},
              {"bound", g.bound},
              {"within_bound", g.within_bound},
              {"eventually_zero", g.eventually_zero}};
}

Json to_json(const GradingTorus& gt) {
  Json values = Json::object();
  for (std::size_t c = 0; c < gt.coords.size(); ++c) {
    Json v = Json::array();
    for (const auto& x : gt.values[c]) v.push_back(to_json(x));
    values[gt.coords[c]] = std::move(v);
  }
  return Json{{"family", gt.family}, {"rank", gt.rank}, {"abstract", gt.abstract}, {"values", std::move(values)}};
}

Json to_json(const ConformanceRow& row) {
  Json j{{"check", row.check}, {"family", row.family}, {"params", row.params}, {"status", row.pass ? "pass" : "fail"}};
  if (!row.witness.is_null()) j["witness"] = row.witness;
  return j;
}

Json conformance_table(const std::string& suite, const std::vector<ConformanceRow>& rows) {
  Json a = Json::array();
  bool all = true;
  for (const auto& r : rows) {
    a.push_back(to_json(r));
    all = all && r.pass;
  }
  return with_schema(Json{{"suite", suite}, {"rows", std::move(a)}, {"all_pass", all}});
}

Json with_schema(Json j) {
  j["schema"] = kSchema;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace supero

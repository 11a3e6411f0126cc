#include "supero/app/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "supero/app/jobs.hpp"
#include "supero/app/suites.hpp"
#include "supero/error.hpp"
#include "supero/families.hpp"
#include "supero/json_io.hpp"

namespace supero::app {

namespace {

struct Common {
  std::string format = "table";
  std::string out_path;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  cmd->add_option("--out", c.out_path, "write the result to this file");
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw ParameterError("cannot write " + c.out_path);
  f << text;
}

std::string algebra_table(const LieSuperalgebra& g) {
  std::ostringstream os;
  os << "algebra     " << g.name() << "\n"
     << "dim         " << g.dim() << " (" << g.dim(Parity::even) << " even, " << g.dim(Parity::odd) << " odd)\n"
     << "torus rank  " << g.torus().size() << "\n";
  if (g.realization()) os << "natural     dim " << g.realization()->size << "\n";
  return os.str();
}

std::string report_table(const CohomologyReport& r) {
  std::ostringstream os;
  os << "algebra     " << r.algebra << "\n"
     << "subalgebra  " << r.subalgebra << "\n"
     << "module      " << r.module << "\n";
  os << std::setw(3) << "p" << std::setw(14) << "dimC(+,-)" << std::setw(12) << "rank d^p" << std::setw(14)
     << "dimH(+,-)" << std::setw(8) << "dimH" << "\n";
  for (const auto& row : r.rows) {
    std::ostringstream c, h;
    c << row.dimC_even << "," << row.dimC_odd;
    h << row.dimH_even << "," << row.dimH_odd;
    os << std::setw(3) << row.p << std::setw(14) << c.str() << std::setw(12) << row.rank_d() << std::setw(14)
       << h.str() << std::setw(8) << row.dimH() << "\n";
  }
  os << "H dims      ";
  const auto d = r.dims();
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << "\nall d zero  " << (r.all_differentials_zero ? "yes" : "no") << "\n";
  return os.str();
}

std::string conformance_text(const std::string& suite, const std::vector<ConformanceRow>& rows) {
  std::size_t wc = 5, wf = 6;
  for (const auto& r : rows) {
    wc = std::max(wc, r.check.size());
    wf = std::max(wf, r.family.size());
  }
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : rows) {
    failed += !r.pass;
    os << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(wc + 2)) << r.check
       << std::setw(static_cast<int>(wf + 2)) << r.family << r.params << "\n";
  }
  os << suite << ": " << rows.size() - failed << "/" << rows.size() << " pass\n";
  return os.str();
}

std::string roots_table(const RootDatum& rd, const ParabolicDecomposition& P) {
  std::ostringstream os;
  os << "algebra " << rd.algebra->name() << ", torus rank " << rd.rank() << ", " << rd.roots.size() << " roots, "
     << (rd.symmetric() ? "Phi = -Phi" : "Phi != -Phi") << "\n";
  os << "H = (";
  for (std::size_t i = 0; i < P.H.values.size(); ++i) os << (i ? "," : "") << P.H.values[i];
  os << ")\n";
  for (const auto& r : rd.roots) {
    const int s = P.H(r.weight).sign();
    os << "  " << std::left << std::setw(24) << r.weight.str() << " even " << r.even_mult << "  odd " << r.odd_mult
       << "  " << (s > 0 ? "n+" : (s < 0 ? "n-" : "levi")) << "\n";
  }
  os << "dim n+ " << P.n_plus.dim() << ", levi " << P.levi.dim() << ", n- " << P.n_minus.dim() << "\n";
  return os.str();
}

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative cohomology of Lie superalgebras", "supero"};
  app.require_subcommand(1);
  CohomologyOptions opts;

  std::string family;
  std::vector<int> params;

  Common build_c;
  auto* build = app.add_subcommand("build", "construct an algebra and print it");
  build->add_option("family", family, "gl, sl, q, pt, p, osp")->required();
  build->add_option("params", params, "family parameters");
  add_common(build, build_c);
  build_c.format = "json";

  Common coh_c;
  std::string sub = "g0", mod = "trivial", h_text;
  std::optional<std::size_t> N;
  auto* coh = app.add_subcommand("coh", "relative cohomology H^p(g, h, M)");
  coh->add_option("family", family)->required();
  coh->add_option("params", params);
  coh->add_option("--sub", sub, "g0|torus|borel|levi|parabolic|borel0|levi0|parabolic0|full|zero|file:PATH");
  coh->add_option("--mod", mod, "trivial|natural|adjoint|dual(X)|X*Y");
  coh->add_option("-N", N, "top degree");
  coh->add_option("--H", h_text, "comma-separated rationals");
  add_common(coh, coh_c);

  Common roots_c;
  auto* roots = app.add_subcommand("roots", "root decomposition and principal parabolic");
  roots->add_option("family", family)->required();
  roots->add_option("params", params);
  roots->add_option("--H", h_text, "comma-separated rationals");
  add_common(roots, roots_c);

  Common verify_c;
  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "jacobi|ddzero|g0-vanishing|invariants|kunneth|appendix|growth")->required();
  add_common(verify, verify_c);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, x;
    const int code = app.exit(e, o, x);
    out << o.str();
    err << x.str();
    return code == 0 ? kOk : kUsage;
  }

  opts.threads = threads_from_env();
  std::optional<Functional> H;
  if (!h_text.empty()) H = parse_functional(h_text);

  if (*build) {
    const auto g = build_family(family, params);
    emit(build_c, build_c.format == "json" ? dump(with_schema(to_json(*g))) : algebra_table(*g), out);
    return kOk;
  }
  if (*coh) {
    const auto g = build_family(family, params);
    const auto h = parse_subalgebra(g, sub, H);
    const auto m = parse_module(g, mod);
    const auto report = cohomology(h, m, N ? *N : default_degree(h), opts);
    emit(coh_c, coh_c.format == "json" ? dump(with_schema(to_json(report))) : report_table(report), out);
    return kOk;
  }
  if (*roots) {
    const auto g = build_family(family, params);
    const auto rd = root_decomposition(g);
    if (H && H->values.size() != rd.rank()) throw ParameterError("--H length must equal the torus rank");
    const auto P = principal_parabolic(rd, H ? *H : generic_functional(rd));
    const std::string text = roots_c.format == "json"
                                 ? dump(with_schema(Json{{"roots", to_json(rd)}, {"parabolic", to_json(P)}}))
                                 : roots_table(rd, P);
    emit(roots_c, text, out);
    return kOk;
  }
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    err << "unknown suite '" << suite << "'\n";
    return kUsage;
  }
  const auto rows = run_suite(suite, opts);
  emit(verify_c, verify_c.format == "json" ? dump(conformance_table(suite, rows)) : conformance_text(suite, rows),
       out);
  const bool all = std::all_of(rows.begin(), rows.end(), [](const ConformanceRow& r) { return r.pass; });
  return all ? kOk : kMathFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return execute(args, out, err);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SubalgebraError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConventionError& e) {
    err << "consistency failure: " << e.what() << "\n";
    return kMathFailure;
  } catch (const DecompositionError& e) {
    err << "consistency failure: " << e.what() << "\n";
    return kMathFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace supero::app

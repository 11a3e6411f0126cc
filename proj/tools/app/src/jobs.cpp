#include "supero/app/jobs.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "supero/checks.hpp"
#include "supero/error.hpp"
#include "supero/families.hpp"
#include "supero/json_io.hpp"

namespace supero::app {

Functional parse_functional(const std::string& text) {
  Functional f;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      f.values.push_back(Rational::parse(item));
    } catch (const std::exception&) {
      throw ParameterError("--H: cannot read '" + item + "' as a rational");
    }
  }
  if (f.values.empty()) throw ParameterError("--H is empty");
  return f;
}

namespace {

Functional checked(const std::optional<Functional>& H, std::size_t rank) {
  if (H && H->values.size() != rank) {
    throw ParameterError("--H has " + std::to_string(H->values.size()) + " entries, torus rank is " +
                         std::to_string(rank));
  }
  return H ? *H : Functional{};
}

}  // namespace

SubalgebraSpan parse_subalgebra(const AlgebraPtr& g, const std::string& spec, const std::optional<Functional>& H) {
  if (spec == "g0") return even_span(g);
  if (spec == "torus") return torus_span(g);
  if (spec == "full") return full_span(g);
  if (spec == "zero") return zero_span(g);
  if (spec == "borel" || spec == "levi" || spec == "parabolic") {
    checked(H, g->torus().size());
    const RootDatum rd = root_decomposition(g);
    const Functional f = H ? *H : generic_functional(rd);
    if (spec == "borel") {
      for (const auto& r : rd.roots) {
        if (f(r.weight).is_zero()) throw ParameterError("borel: H vanishes on a root");
      }
    }
    const auto P = principal_parabolic(rd, f);
    return SubalgebraSpan(g, (spec == "levi" ? P.levi : P.parabolic).vectors(), spec);
  }
  if (spec == "borel0" || spec == "levi0" || spec == "parabolic0") {
    const AlgebraPtr g0 = even_part(g);
    checked(H, g0->torus().size());
    const EvenShape shape =
        spec == "borel0" ? EvenShape::borel : (spec == "levi0" ? EvenShape::levi : EvenShape::parabolic);
    return lift_span(even_shape(g0, shape, H), even_span(g), spec);
  }
  if (spec.rfind("file:", 0) == 0) {
    const std::string path = spec.substr(5);
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open " + path);
    Json j;
    try {
      in >> j;
    } catch (const Json::exception& e) {
      throw FormatError(path + ": " + e.what());
    }
    auto h = span_from_json(g, j);
    h.require_closed();
    return h;
  }
  throw ParameterError("unknown subalgebra '" + spec + "'");
}

namespace {

class ModuleParser {
 public:
  ModuleParser(const AlgebraPtr& g, const std::string& text) : g_(g), s_(text) {}

  Representation parse() {
    auto r = expr();
    if (pos_ != s_.size()) fail();
    return r;
  }

 private:
  Representation expr() {
    auto r = term();
    while (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      r = tensor(r, term());
    }
    return r;
  }

  Representation term() {
    if (eat("trivial")) return trivial(g_);
    if (eat("natural")) return natural(g_);
    if (eat("adjoint")) return adjoint(g_);
    if (eat("dual(")) {
      auto r = expr();
      if (!eat(")")) fail();
      return dual(r);
    }
    fail();
  }

  bool eat(const std::string& word) {
    if (s_.compare(pos_, word.size(), word) != 0) return false;
    pos_ += word.size();
    return true;
  }

  [[noreturn]] void fail() const {
    throw ParameterError("cannot parse module '" + s_ + "' at position " + std::to_string(pos_));
  }

  const AlgebraPtr& g_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Representation parse_module(const AlgebraPtr& g, const std::string& spec) { return ModuleParser(g, spec).parse(); }

unsigned threads_from_env() {
  const char* v = std::getenv("SUPERO_THREADS");
  if (!v || !*v) return 0;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 0) throw ParameterError("SUPERO_THREADS must be a nonnegative integer");
  return static_cast<unsigned>(n);
}

}  // namespace supero::app

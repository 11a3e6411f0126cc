#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "supero/checks.hpp"
#include "supero/invariants.hpp"
#include "supero/roots.hpp"

namespace supero {

using Json = nlohmann::json;  // std::map objects: keys always come out sorted

inline constexpr const char* kSchema = "superO/1";

/// [num, den]; each entry is an integer, or a decimal string when it does not
/// fit in 64 bits.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const SparseVector& v);  // [[index, [num, den]], ...]
SparseVector sparse_vector_from_json(const Json& j);

/// Exact round trip through algebra_from_json.
Json to_json(const LieSuperalgebra& g);
LieSuperalgebra algebra_from_json(const Json& j);

/// {"label", "vectors"} over a given parent; vectors in parent coordinates.
Json to_json(const SubalgebraSpan& h);
SubalgebraSpan span_from_json(const AlgebraPtr& parent, const Json& j);

Json to_json(const Weight& w);
Json to_json(const RootDatum& rd);
Json to_json(const ParabolicDecomposition& p);
Json to_json(const CohomologyReport& r);
Json to_json(const HilbertTable& t);
Json to_json(const GrowthEstimate& g);
Json to_json(const GradingTorus& gt);

/// One row of a verification table.
struct ConformanceRow {
  std::string check;
  std::string family;
  std::string params;
  bool pass = true;
  Json witness;  // null when there is nothing to report
};

Json to_json(const ConformanceRow& row);
/// {"schema", "suite", "rows", "all_pass"}; rows keep the given order.
Json conformance_table(const std::string& suite, const std::vector<ConformanceRow>& rows);

/// Adds "schema" to an object.
Json with_schema(Json j);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace supero

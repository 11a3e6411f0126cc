#pragma once

#include <string>
#include <utility>
#include <vector>

#include "supero/json_io.hpp"

namespace supero::app {

struct FamilySpec {
  std::string family;
  std::vector<int> params;
};

/// jacobi, ddzero, g0-vanishing, invariants, kunneth, appendix, growth.
const std::vector<std::string>& suite_names();

/// Rows in a fixed order. ParameterError for an unknown suite.
std::vector<ConformanceRow> run_suite(const std::string& suite, const CohomologyOptions& opts = {});

/// Algebras of the axiom suite.
std::vector<FamilySpec> axiom_matrix();
/// Algebras of the d^2 = 0 suite; each is paired with subalgebras g0, torus,
/// levi of a seeded random H and the generic Borel, and modules trivial,
/// natural, adjoint.
std::vector<FamilySpec> complex_matrix();
/// Families whose gradings the appendix suite certifies.
std::vector<FamilySpec> grading_matrix();

}  // namespace supero::app

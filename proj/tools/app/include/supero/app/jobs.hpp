#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supero/cohomology.hpp"
#include "supero/weight.hpp"

namespace supero::app {

/// Comma-separated rationals, e.g. "1,1/2,-3". ParameterError on bad input.
Functional parse_functional(const std::string& text);

/// g0 | torus | borel | levi | parabolic | borel0 | levi0 | parabolic0 | full |
/// zero | file:<path>. levi/parabolic use H when given; the *0 variants are
/// built inside the even part and lifted.
SubalgebraSpan parse_subalgebra(const AlgebraPtr& g, const std::string& spec, const std::optional<Functional>& H);

/// trivial | natural | adjoint | dual(<expr>) | <expr>*<expr>.
Representation parse_module(const AlgebraPtr& g, const std::string& spec);

/// SUPERO_THREADS, 0 (auto) when unset. ParameterError when not a number.
unsigned threads_from_env();

}  // namespace supero::app

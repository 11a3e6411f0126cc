#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace supero::app {

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2, kMathFailure = 3 };

/// Runs one command line (args exclude the program name). Results go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supero::app

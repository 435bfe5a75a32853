#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace steiner::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kQuadrature = 3,
  kRoots = 4,
  kValidation = 5,
};

// Runs the command line `args` (without the program name). Normal output goes
// to `out` unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parses "n" or "a..b" (inclusive) into a list of dimensions.
std::vector<int> parse_dim_range(const std::string& text);

}  // namespace steiner::cli

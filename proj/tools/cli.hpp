#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hodgekit::cli {

/// Exit codes of the `hodge` tool.
enum ExitCode : int {
  kSuccess = 0,
  kPredicateFalse = 1,
  kMalformedInput = 2,
  kNumericalFailure = 3,
};

/// Runs one `hodge` invocation. `args` excludes the program name. stdout
/// receives at most one JSON document; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hodgekit::cli

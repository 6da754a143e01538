#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace medgeo::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kInputError = 2,
  kResourceError = 3,
  kConsistencyError = 4,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace medgeo::cli

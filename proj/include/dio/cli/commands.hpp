#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dio::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // no solution, dependent columns, failed verification
  kInputError = 2,
  kResourceCap = 3,
};

/// Runs the command line `args` (args[0] is the program name). Regular output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dio::cli

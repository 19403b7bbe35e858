#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperpoly::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kPass = 0,
  kCheckedFailure = 1,
  kUsageError = 2,
};

/// Runs the command line `hyperpoly <args...>` (args exclude the program
/// name) writing normal output to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperpoly::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dicke3::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitValidation = 2,
  kExitBudget = 3,
  kExitEdFailed = 4,
  kExitVerifyFailed = 5,
};

/// Runs the dicke3 command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dicke3::cli

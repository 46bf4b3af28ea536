#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dspath {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitTotalConflict = 2,
  kExitVerifyMismatch = 3,
};

/// Runs one `dspath` command line. `args[0]` is the program name. Reports go
/// to `out`, warnings and errors to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dspath

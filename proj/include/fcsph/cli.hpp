#pragma once

#include <ostream>

namespace fcsph {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

/// Runs `fcsph` with the given arguments; reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fcsph

#pragma once

#include <iosfwd>

namespace dshell {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 2,
  kExitNumericalFailure = 3,
};

/// Entry point of the `dshell` tool. Results go to `out` (or --output),
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dshell

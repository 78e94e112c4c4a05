#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rankbrittle {

enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitInput = 2, kExitResource = 3 };

/// Runs the command line `args` (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankbrittle

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bridgestate {

/// Exit codes: 0 success, 1 mathematical-consistency failure, 2 invalid input or I/O.
enum ExitCode : int { kExitOk = 0, kExitConsistency = 1, kExitInput = 2 };

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bridgestate

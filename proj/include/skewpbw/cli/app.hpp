#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewpbw::cli {

enum ExitCode : int { kOk = 0, kFails = 1, kUsage = 2, kUndecided = 3 };

/// Runs one command line (args[0] is the first subcommand, not the program
/// name) and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewpbw::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kgsolve::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Runs the kgsolve command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kgsolve::cli

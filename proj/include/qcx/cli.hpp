#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcx::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`; "-" as a file name reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace qcx::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hinterp::tools {

/// Exit codes of the command-line front end.
enum ExitCode : int { kOk = 0, kAssertionFailed = 1, kUsage = 2, kNumeric = 3 };

/// Parses args (without the program name), runs the command and writes its
/// table to `out` (or the --out file) and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hinterp::tools

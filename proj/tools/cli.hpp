#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace strassoc::cli {

/// Exit codes of the command-line tool.
enum Exit : int { kHolds = 0, kFails = 1, kUsage = 2, kInconclusive = 3 };

/// Runs one command. `args` excludes the program name. JSON goes to `out`, a
/// one-line human summary and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strassoc::cli

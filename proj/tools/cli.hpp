#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ucb::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNumeric = 2, kIo = 3 };

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ucb::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kkb::cli {

/// Exit statuses of the `kkb` tool.
enum ExitCode : int {
  kOk = 0,
  kViolation = 1,   // verify found an inequality that fails
  kBadInput = 2,    // parse/validation error, bad flags
  kCapExceeded = 3, // instance too large for an exact computation
};

/// Runs the tool with `args` (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kkb::cli

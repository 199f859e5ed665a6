#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oscillent::cli {

/// Exit codes of `run`.
enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,      ///< bad flags, unknown subcommand, out-of-domain parameters
  kNumerical = 2,  ///< a numerical self-consistency check failed
  kResource = 3,   ///< a configured computational cap was exceeded
};

/// Entry point of the `oscillent` tool. `args` excludes the program name.
/// Tabular and JSON results go to `out` (or the file named by --output);
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oscillent::cli

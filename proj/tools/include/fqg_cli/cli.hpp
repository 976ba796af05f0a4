#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fqg::cli {

/// Exit codes of the `fqg` tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitChecksFailed = 1;
inline constexpr int kExitStructural = 2;

/// Runs the command line `args` (without the program name), writing reports
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fqg::cli

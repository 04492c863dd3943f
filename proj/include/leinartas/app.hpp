#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leinartas {

/// Process exit codes of the command-line driver.
enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,        // parse or usage error
  exit_domain = 2,       // zero denominator, factor product mismatch
  exit_verify_fail = 3,  // --verify found a failing decomposition
  exit_internal = 4,     // engine invariant violated
};

/// Runs the driver on `args` (args[0] is the program name), writing results
/// to `out` and diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace leinartas

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plateau::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kValidationFailed = 1,
  kBadFlags = 2,
  kInvalidInput = 3,
  kOutputError = 4,
  kEngineError = 5,
};

/// Runs one command line (args excludes the program name). Rendered output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plateau::cli

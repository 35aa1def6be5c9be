#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcolor::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidInput = 2,
  kCapExceeded = 3,
  kNotAUnit = 4,
};

/// Runs one command line (args excludes the program name). Regular output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcolor::cli

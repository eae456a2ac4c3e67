#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace regneck::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kBadInput = 2,
  kTheoremViolation = 3,
  kGuardExceeded = 4,
};

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace regneck::cli

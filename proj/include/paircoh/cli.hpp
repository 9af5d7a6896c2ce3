#pragma once

#include <iosfwd>

namespace paircoh::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kUsage = 2,
  kDomain = 3,
  kNumerical = 4,
};

// Runs the command line (argv[0] is the program name). Results go to `out`
// unless --out names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace paircoh::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semirank::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,        // bad arguments or parameters
  kMismatch = 2,       // a verification suite found a disagreement
  kParseError = 3,     // unreadable or invalid table file
  kGuardExceeded = 4,  // a configured search limit was hit
};

// Runs one command. `args` excludes the program name. Machine-readable
// key=value lines and reports go to `out`; diagnostics go to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace semirank::cli

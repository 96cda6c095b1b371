#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace taumatch::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,         // bad arguments, unreadable or malformed workspace, unknown names
  kVerification = 3,  // a pair or module failed the requested check
  kInternal = 4,      // an invariant the library guarantees did not hold
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace taumatch::cli

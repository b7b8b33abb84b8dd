#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace ndt::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kHypothesisViolation = 2,
  kUnsupported = 3,
  kRefused = 4,
};

// Runs one CLI invocation. args excludes the program name. "-" as a FILE
// argument reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace ndt::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace logmink::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kInvalidBody = 3,
  kComputation = 4,
  kPositioning = 5,
  kViolated = 6,
};

// Runs the command line given by args (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logmink::cli

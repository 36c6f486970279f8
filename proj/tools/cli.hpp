#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trigsum::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitDomain = 2,
  kExitPole = 3,
  kExitUsage = 64,
  kExitCannotWrite = 74
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trigsum::cli

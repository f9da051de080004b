#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dnlift::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputError = 2,
  kNotDN = 3,
  kResourceLimit = 4,
  kInternal = 5,
};

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dnlift::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace roispot::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kFormat = 2,
  kValidation = 3,
  kIo = 4,
  kVideoMismatch = 5,
};

/// Runs the roispot command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace roispot::cli

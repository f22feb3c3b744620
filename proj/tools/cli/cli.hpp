#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vconf::cli {

// Exit codes shared by every subcommand.
enum Exit : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,         // invalid flags, unparsable input, validation errors
  kGuard = 3,         // a size guard was hit
  kCheckFailed = 4,   // an oracle or reference check disagreed
};

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vconf::cli

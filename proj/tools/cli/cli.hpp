#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace editdiam::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kResource = 3,
  kDomain = 4,
  kInternal = 5,
};

/// Runs the command line; results go to out (or the -o file), diagnostics
/// to err. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace editdiam::cli

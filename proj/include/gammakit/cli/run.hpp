#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gammakit::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,  // clean negative finding: not equivalent, VOID, not found
  kExitUsage = 2,     // usage, parse, config or I/O error
};

/// Runs one command line (without the program name) and returns its exit
/// code. Nothing is written to the real stdout or stderr.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gammakit::cli

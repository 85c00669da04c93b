#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hfcone::cli {

enum ExitCode : int {
  kOk = 0,
  kViolated = 2,
  kUsage = 64,
  kDataError = 65,
  kInternal = 70,
};

/// Runs one command line (args[0] is the program name). Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hfcone::cli

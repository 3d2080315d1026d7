#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricq::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,  // I/O, parse and configuration errors
  kInvalidFan = 2,
  kOutOfRegime = 3,
  kMismatch = 4,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricq::cli

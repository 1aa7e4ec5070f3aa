#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fbp {

// Exit codes of the command line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitNonconverged = 2,
  kExitCapRefused = 3,
  kExitUsage = 64,
  kExitFormat = 65,
  kExitInternal = 70,
  kExitCheckpoint = 74,
};

// Runs one command line (without the program name) and returns its exit
// code. Results go to `out` (or to --out), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fbp

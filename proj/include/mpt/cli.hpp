#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mpt {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // selftest failure or internal error
  kExitInput = 2,
  kExitPrecondition = 3,
  kExitResource = 4,
};

/// Runs one command; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mpt

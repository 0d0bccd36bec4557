#pragma once

#include <ostream>

namespace hsgeom {

/// Exit codes of the hsgeom binary.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitParse = 2,
  kExitInvariant = 3,
};

/// Entry point of the command-line tool; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hsgeom

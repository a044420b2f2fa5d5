#pragma once

#include <ostream>

namespace plateau {

enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2 };

/// Parses argv (argv[0] is the program name) and runs one subcommand:
/// factor, genpoly, counts, weights or verify.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace plateau

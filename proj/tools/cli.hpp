#pragma once

// The gchp command-line front end, callable in-process for tests.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.

#include <ostream>
#include <string>
#include <vector>

namespace gchp::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

/// Parses args (args[0] is the program name) and runs the subcommand.
/// Normal output goes to out unless --out names a file; diagnostics go to err.
/// GCHP_MODE is read from the environment when --mode is absent.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gchp::cli

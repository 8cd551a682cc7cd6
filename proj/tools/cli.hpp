#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mc4::cli {

// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_inconsistent = 1;  // solve only; verify uses it for a failed check
inline constexpr int exit_usage = 2;

// Runs the mc4 command line with `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mc4::cli

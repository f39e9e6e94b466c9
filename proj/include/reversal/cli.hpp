// The `reversal` command line.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reversal::cli {

inline constexpr int exit_yes = 0;
inline constexpr int exit_no = 1;
inline constexpr int exit_inconclusive = 2;
inline constexpr int exit_usage = 64;

/// Runs one command; `args` excludes the program name.  Returns the exit
/// status.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

}  // namespace reversal::cli

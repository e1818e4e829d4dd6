#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irabi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

/// Runs one subcommand (spectrum, sweep, evolve, susy, converge). `args`
/// excludes the program name. Summary lines go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace irabi::cli

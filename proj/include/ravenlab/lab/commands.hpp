#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ravenlab::lab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUndecided = 2;

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out` (or the --out file), diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ravenlab::lab

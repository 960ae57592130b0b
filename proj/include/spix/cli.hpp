#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spix {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBoundViolated = 3;

// Runs the command line `spix <args...>` (args exclude the program name),
// writing reports to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spix

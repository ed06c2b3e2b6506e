#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nihoapn::cli {

// Stable exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;  // prediction mismatch or failed property
inline constexpr int kExitUsage = 2;     // bad flags or parameters

// Runs the command line `args` (args[0] is the program name). Reports go to
// `out` or to --out files; diagnostics and error JSON go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nihoapn::cli

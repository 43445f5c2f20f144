#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wallkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecondition = 3;

// Runs one invocation; `args` excludes the program name. JSON (or, with
// --pretty, a plain-text rendering) goes to `out`, diagnostics to `err`.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace wallkit::cli

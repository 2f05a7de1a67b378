#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace segre::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one segre-kit invocation. `args` excludes the program name. Results
/// go to `out`, diagnostics and progress to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace segre::cli

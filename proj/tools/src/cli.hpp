#ifndef BAXTER_TOOLS_CLI_HPP
#define BAXTER_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace baxter::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace baxter::cli

#endif

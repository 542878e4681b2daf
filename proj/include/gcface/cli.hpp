#ifndef GCFACE_CLI_HPP
#define GCFACE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gcface {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation; `args` excludes the program name. Returns 0 when
/// every requested check passes, 1 when a check fails, 2 on usage errors
/// and refusals.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gcface

#endif

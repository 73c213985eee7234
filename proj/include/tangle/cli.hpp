#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tangle::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

/// Runs one command line. `args` excludes the program name. Results go to
/// `out`; usage errors and warnings go to `err`. Returns the process exit
/// status: 0 on success, 2 on a usage error, 3 when a size cap is exceeded.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace tangle::cli

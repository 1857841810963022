#pragma once

// The `charpoly` command line, callable in-process.

#include <ostream>
#include <string>
#include <vector>

namespace charpoly {

inline constexpr int kExitUsage = 64;

/// args excludes the program name. Returns the process exit code:
/// 0 all pass, 1 failure, 2 open-conjecture mismatch, 64 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charpoly

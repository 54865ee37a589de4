#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyplam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (without the program name) and returns the exit
/// code: 0 success, 1 a checked claim or bound failed, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyplam::cli

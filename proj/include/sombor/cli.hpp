#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sombor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. `args` excludes the program name.
/// Exit codes: 0 success, 1 a verification check failed, 2 usage/input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest decimal that round-trips.
std::string format_real(double value);

}  // namespace sombor::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace infgon::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kVerdictFailed = 1;
inline constexpr int kUsage = 2;

/// Runs one command; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infgon::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace simion::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsage = 2;
inline constexpr int kScale = 3;

// Runs one command line (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace simion::cli

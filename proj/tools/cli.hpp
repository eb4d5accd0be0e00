#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fixloc::cli {

// Exit codes.
inline constexpr int kSuccess = 0;
inline constexpr int kUsage = 1;
inline constexpr int kRefuted = 2;
inline constexpr int kInapplicable = 3;

// Runs one command; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fixloc::cli

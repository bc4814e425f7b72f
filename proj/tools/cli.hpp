#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grcat::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

// Runs one command line (without the program name). Results go to `out`,
// parse diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grcat::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace comax::cli {

// Exit codes shared by every command.
inline constexpr int kOk = 0;
inline constexpr int kDisagreement = 1;
inline constexpr int kUsage = 2;
inline constexpr int kIoError = 3;

/// Runs one command line (without the program name) and returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace comax::cli

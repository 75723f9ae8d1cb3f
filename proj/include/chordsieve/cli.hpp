#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chordsieve::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kDomainError = 2;
inline constexpr int kLimitError = 3;

// Runs one command line (argv[0] is the program name). Data goes to `out`,
// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chordsieve::cli

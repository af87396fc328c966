#ifndef TRAAG_TOOLS_CLI_H
#define TRAAG_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace traag::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 2;
inline constexpr int kBudgetExhausted = 3;
inline constexpr int kVerificationFailure = 4;

// Runs one command line (args[0] is the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace traag::cli

#endif  // TRAAG_TOOLS_CLI_H

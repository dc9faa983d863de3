#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace agm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

// Runs one subcommand. args excludes the program name. JSON results go to
// out, diagnostics (including {"error": code, "message": ...}) to err.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace agm::cli

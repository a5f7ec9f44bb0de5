#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gegen::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. args excludes the program name. Data goes to out,
/// messages to err. Returns 0 on success or pass, 1 on a fail verdict or a
/// failed computation or write, 2 on usage or domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gegen::cli

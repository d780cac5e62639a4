#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stirling::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInvalid = 3;
inline constexpr int kInconclusive = 4;

/// args excludes the program name. Writes one CSV table or JSON document to
/// out (or to --output) and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stirling::cli

#pragma once

#include <iosfwd>
#include <map>
#include <string>

namespace chromabound {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses `key = value` lines. Blank lines and lines starting with '#' are skipped.
/// Throws std::invalid_argument on a line without '='.
std::map<std::string, std::string> parse_config(const std::string& text);

/// Entry point shared by the executable and the tests. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chromabound

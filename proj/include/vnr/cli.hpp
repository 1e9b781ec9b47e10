#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vnr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;     // bad flags, unreadable or malformed input
inline constexpr int kExitDomain = 2;    // rule and data incompatible
inline constexpr int kExitInternal = 3;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vnr::cli

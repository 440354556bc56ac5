#pragma once

#include <string>
#include <vector>

namespace ridgebound::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line; argv[0] is the program name.
int dispatch(int argc, const char* const* argv);
// Same, without the program name.
int dispatch(const std::vector<std::string>& args);

}  // namespace ridgebound::cli

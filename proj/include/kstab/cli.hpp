#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kstab {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;   // verification mismatch or negative verdict
inline constexpr int kExitInput = 2;      // unknown id, malformed file, bad flags

// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kstab

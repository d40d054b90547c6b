#pragma once

// Command-line front end. Exit status: 0 success, 1 input error,
// 2 verification failure.

#include <ostream>
#include <string>
#include <vector>

namespace ffzeta {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitVerification = 2;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffzeta

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wintgen {

// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 bad input or config.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wintgen

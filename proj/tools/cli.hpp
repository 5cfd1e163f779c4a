#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cnsgt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Parses `args` (without the program name) and runs one command. Primary
/// output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cnsgt::cli

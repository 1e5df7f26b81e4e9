#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace askg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 when the library
/// reports an error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace askg::cli

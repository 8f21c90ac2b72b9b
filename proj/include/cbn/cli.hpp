#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cbn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitCapacity = 2;
inline constexpr int kExitUnsupported = 3;

/// Runs the `cbn` command line (args excludes the program name). Results go
/// to `out`, diagnostics to `err`; returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cbn::cli

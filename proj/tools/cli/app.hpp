#pragma once

#include <iosfwd>

namespace reactlin::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInapplicable = 3;
inline constexpr int kExitNumeric = 4;

/// Whole command line in-process; used by main and by the CLI tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace reactlin::cli

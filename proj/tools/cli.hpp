#pragma once

#include <iosfwd>

namespace growca::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitTestFail = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the growca executable. Diagnostics go to `err`,
/// help text and analyze reports without --report go to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace growca::cli

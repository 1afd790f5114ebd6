#pragma once

#include <iosfwd>

#include "symlog/error.hpp"

namespace symlog::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitObstruction = 2;
inline constexpr int kExitConvergence = 3;
inline constexpr int kExitInvalid = 4;

int exit_code_for(ErrorCode code) noexcept;

/// Entry point of the `symlog` tool:
///   symlog {sqrt|log|diag|index|gen|bench|check} [flags]
/// Result data goes to files (or to `out` with --stdout); residual reports go
/// to --report or to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symlog::cli

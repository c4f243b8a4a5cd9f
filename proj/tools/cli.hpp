#pragma once

#include <ostream>

namespace psd::cli {

inline constexpr int kExitCanonical = 0;
inline constexpr int kExitBot = 2;
inline constexpr int kExitError = 3;

/// Subcommands gen, prove, verify, attack, oracle, bench.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace psd::cli

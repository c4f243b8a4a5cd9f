#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "psd/core/adversary.hpp"

namespace psd {

struct TrialStats {
  std::size_t trials = 0;
  std::size_t canonical = 0;      // verdict == c(x)
  std::size_t bot = 0;
  std::size_t non_canonical = 0;  // Canonical(y) with y != c(x), or any Canonical when x has no solution
  std::size_t errors = 0;         // prover-side typed errors (e.g. retry exhaustion)

  double soundness_error() const { return trials ? double(non_canonical) / double(trials) : 0.0; }
  bool solvable = true;           // c(x) exists; otherwise Bot is the correct verdict
  double completeness() const { return trials ? double(solvable ? canonical : bot) / double(trials) : 0.0; }
};

/// Fraction of trials whose verdict is neither c(x) nor Bot. c(x) comes from
/// the problem's oracle unless supplied. Trial t uses verifier seed
/// derive(seed, t) and mutation seed derive(policy.seed, t).
TrialStats estimate_soundness(const Problem& problem, std::string_view instance, AdversaryPolicy policy,
                              std::size_t trials, std::uint64_t seed,
                              std::optional<std::optional<std::string>> canonical = std::nullopt);

/// Honest prover; fraction of trials with verdict == c(x).
TrialStats estimate_completeness(const Problem& problem, std::string_view instance, std::size_t trials,
                                 std::uint64_t seed,
                                 std::optional<std::optional<std::string>> canonical = std::nullopt);

}  // namespace psd

#include "psd/core/harness.hpp"

#include "psd/core/errors.hpp"

namespace psd {
namespace {

constexpr std::uint64_t kProverStream = 0x7072;

void classify(TrialStats& stats, const ProtocolOutcome& outcome, const std::optional<std::string>& canonical) {
  if (outcome.is_bot()) {
    ++stats.bot;
  } else if (canonical && outcome.solution() == *canonical) {
    ++stats.canonical;
  } else {
    ++stats.non_canonical;
  }
}

std::optional<std::string> resolve(const Problem& problem, std::string_view instance,
                                   std::optional<std::optional<std::string>> canonical) {
  if (canonical) return *std::move(canonical);
  return problem.oracle(instance);
}

TrialStats run_trials(const Problem& problem, std::string_view instance, const Prover& prover_for_trial,
                      std::size_t trials, std::uint64_t seed, const std::optional<std::string>& canonical,
                      const AdversaryPolicy* policy) {
  if (trials == 0) throw ConfigError("trial count must be positive");
  TrialStats stats;
  stats.solvable = canonical.has_value();
  for (std::size_t t = 0; t < trials; ++t) {
    ++stats.trials;
    RunSeeds seeds{RandomStream::derive(seed ^ kProverStream, t), RandomStream::derive(seed, t)};
    try {
      if (policy) {
        MutatingProver cheat(problem, {policy->kind, RandomStream::derive(policy->seed, t)});
        classify(stats, run_protocol(instance, cheat, problem.verifier(), seeds).outcome, canonical);
      } else {
        classify(stats, run_protocol(instance, prover_for_trial, problem.verifier(), seeds).outcome, canonical);
      }
    } catch (const RetryExhausted&) {
      ++stats.errors;
    }
  }
  return stats;
}

}  // namespace

TrialStats estimate_soundness(const Problem& problem, std::string_view instance, AdversaryPolicy policy,
                              std::size_t trials, std::uint64_t seed,
                              std::optional<std::optional<std::string>> canonical) {
  if (trials == 0) throw ConfigError("trial count must be positive");
  auto c = resolve(problem, instance, std::move(canonical));
  return run_trials(problem, instance, problem.prover(), trials, seed, c, &policy);
}

TrialStats estimate_completeness(const Problem& problem, std::string_view instance, std::size_t trials,
                                 std::uint64_t seed, std::optional<std::optional<std::string>> canonical) {
  if (trials == 0) throw ConfigError("trial count must be positive");
  auto c = resolve(problem, instance, std::move(canonical));
  return run_trials(problem, instance, problem.prover(), trials, seed, c, nullptr);
}

}  // namespace psd

#include "psd/core/protocol.hpp"

#include <chrono>

#include "psd/core/errors.hpp"

namespace psd {
namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::string verifier_record(const ProtocolOutcome& outcome, std::string_view challenge) {
  std::string out(challenge);
  if (!out.empty() && out.back() != '\n') out += '\n';
  return out + outcome.serialize();
}

RunResult run_protocol(std::string_view instance, const Prover& prover, const Verifier& verifier, RunSeeds seeds) {
  if (prover.problem() != verifier.problem())
    throw ConfigError("prover is registered for '" + std::string(prover.problem()) + "' but verifier for '" +
                      std::string(verifier.problem()) + "'");
  RandomStream prover_rng(seeds.prover, Role::prover);
  RandomStream verifier_rng(seeds.verifier, Role::verifier);

  auto t0 = std::chrono::steady_clock::now();
  std::string message = prover.first_message(instance, prover_rng);
  double prover_seconds = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  VerifierDecision decision = verifier.decide(instance, message, verifier_rng);
  double verifier_seconds = seconds_since(t0);

  Transcript transcript(std::string(prover.problem()), instance_digest(instance));
  transcript.append(Role::prover, std::move(message));
  transcript.append(Role::verifier, std::move(decision.record));
  return RunResult{std::move(decision.outcome), std::move(transcript), prover_seconds, verifier_seconds};
}

ProtocolOutcome replay(std::string_view instance, const Transcript& transcript, const Verifier& verifier,
                       std::uint64_t verifier_seed) {
  if (transcript.problem() != verifier.problem())
    throw ConfigError("transcript is for '" + transcript.problem() + "', verifier for '" +
                      std::string(verifier.problem()) + "'");
  if (transcript.digest() != instance_digest(instance))
    throw ConfigError("instance digest does not match transcript");
  if (transcript.messages().empty()) return ProtocolOutcome::bot("empty-transcript");
  RandomStream rng(verifier_seed, Role::verifier);
  return verifier.decide(instance, transcript.messages().front().payload, rng).outcome;
}

}  // namespace psd

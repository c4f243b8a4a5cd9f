#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "psd/core/outcome.hpp"
#include "psd/core/random.hpp"
#include "psd/core/transcript.hpp"

namespace psd {

/// Every protocol here is prover-first and constant-round: one prover
/// message, then the verifier samples (if it needs to) and decides.
class Prover {
 public:
  virtual ~Prover() = default;
  virtual std::string_view problem() const = 0;
  /// Throws ParseError on a malformed instance and RetryExhausted when the
  /// honest prime search gives up.
  virtual std::string first_message(std::string_view instance, RandomStream& rng) const = 0;
};

struct VerifierDecision {
  ProtocolOutcome outcome;
  /// Verifier message for the transcript: sampled challenge (if any) and verdict.
  std::string record;
};

class Verifier {
 public:
  virtual ~Verifier() = default;
  virtual std::string_view problem() const = 0;
  /// Throws ParseError only for a malformed instance; a malformed or
  /// dishonest prover message always yields Bot.
  virtual VerifierDecision decide(std::string_view instance, std::string_view prover_message,
                                  RandomStream& rng) const = 0;
};

inline constexpr std::uint64_t kDefaultProverSeed = 0xC0FFEE;
inline constexpr std::uint64_t kDefaultVerifierSeed = 0xB07;

struct RunSeeds {
  std::uint64_t prover = kDefaultProverSeed;
  std::uint64_t verifier = kDefaultVerifierSeed;
};

struct RunResult {
  ProtocolOutcome outcome;
  Transcript transcript;
  double prover_seconds = 0;
  double verifier_seconds = 0;
};

/// Executes prover then verifier on the serialized instance. Tag mismatch
/// throws ConfigError; instance parse failures propagate as ParseError.
RunResult run_protocol(std::string_view instance, const Prover& prover, const Verifier& verifier,
                       RunSeeds seeds = {});

/// Re-runs the verifier on the transcript's prover message. Pure in
/// (instance, transcript, seed). Throws ConfigError on digest or tag mismatch.
ProtocolOutcome replay(std::string_view instance, const Transcript& transcript, const Verifier& verifier,
                       std::uint64_t verifier_seed = kDefaultVerifierSeed);

/// Verifier record helper: optional challenge lines followed by the verdict.
std::string verifier_record(const ProtocolOutcome& outcome, std::string_view challenge = {});

}  // namespace psd

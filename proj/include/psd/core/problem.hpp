#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "psd/core/protocol.hpp"

namespace psd {

enum class MutationKind;

/// Size knobs for instance generation; each problem reads the ones it uses.
struct GenParams {
  std::size_t n = 8;
  std::size_t d = 4;
  std::size_t k = 3;
  bool planted = false;
  std::uint64_t seed = 1;
};

/// One search problem: its instance format, honest prover, verifier,
/// brute-force canonical oracle and generator.
class Problem {
 public:
  virtual ~Problem() = default;

  virtual std::string_view tag() const = 0;
  /// True when the verifier uses no randomness.
  virtual bool deterministic() const = 0;
  /// Parse and re-serialize in canonical form; throws ParseError.
  virtual std::string canonicalize(std::string_view instance) const = 0;
  virtual const Prover& prover() const = 0;
  virtual const Verifier& verifier() const = 0;
  /// Canonical payload c(x) by exhaustive search, or nullopt if x has no solution.
  /// Throws ConfigError above the problem's desk-scale bound.
  virtual std::optional<std::string> oracle(std::string_view instance) const = 0;
  /// Reproducible per params.seed; throws ConfigError on bad sizes.
  virtual std::string generate(const GenParams& params) const = 0;
  /// Worst-case instance of the given size for scaling measurements.
  virtual std::string bench_instance(std::size_t size, std::uint64_t seed) const;
  /// Problem-aware mutation of an honest prover message. Returning nullopt
  /// falls back to the generic text-level mutation.
  virtual std::optional<std::string> mutate(MutationKind kind, std::string_view instance, std::string_view message,
                                            RandomStream& rng) const;
};

}  // namespace psd

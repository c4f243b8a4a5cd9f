#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace psd {

enum class Role { prover, verifier };

std::string_view to_string(Role role);

/// Seeded randomness owned by one party. Bounded draws use rejection
/// sampling on the raw 64-bit engine output, so streams are reproducible
/// across standard libraries (std distributions are not).
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, Role role);

  std::uint64_t seed() const { return seed_; }
  Role role() const { return role_; }

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin(double p_true);

  /// SplitMix64 finalizer; derives independent per-trial seeds.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t seed_;
  Role role_;
  std::mt19937_64 engine_;
};

}  // namespace psd

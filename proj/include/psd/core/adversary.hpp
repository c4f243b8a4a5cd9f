#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "psd/core/problem.hpp"

namespace psd {

enum class MutationKind {
  flip_solution_block,
  truncate_certificate,
  swap_certificate_entries,
  replace_prime,
  inflate_count,
  echo_honest,
  tamper_coefficients,
  perturb_field,
};

std::span<const MutationKind> all_mutation_kinds();
std::string_view to_string(MutationKind kind);
std::optional<MutationKind> parse_mutation_kind(std::string_view name);

struct AdversaryPolicy {
  MutationKind kind = MutationKind::echo_honest;
  std::uint64_t seed = 1;
};

/// Text-level mutation of a `key: value` prover message. echo-honest
/// returns the message byte-identical.
std::string generic_mutate(MutationKind kind, std::string_view message, RandomStream& rng);

/// Problem-aware mutation with generic fallback.
std::string mutate_message(const Problem& problem, MutationKind kind, std::string_view instance,
                           std::string_view message, RandomStream& rng);

/// Cheating prover: runs the honest prover, then rewrites its message.
class MutatingProver final : public Prover {
 public:
  MutatingProver(const Problem& problem, AdversaryPolicy policy) : problem_(problem), policy_(policy) {}
  std::string_view problem() const override { return problem_.tag(); }
  std::string first_message(std::string_view instance, RandomStream& rng) const override;

 private:
  const Problem& problem_;
  AdversaryPolicy policy_;
};

}  // namespace psd

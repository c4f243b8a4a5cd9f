#pragma once

// Generic lexicographically-first composer: the prover sends y = y_1..y_k,
// the verifier checks R(x, y) and, for every block i, that no z_i < y_i
// extends y_1..y_{i-1} to a solution. The verdict is therefore the
// lex-first solution or Bot, whatever the prover sends.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "psd/core/protocol.hpp"

namespace psd {

using Blocks = std::span<const std::size_t>;

struct LexSearchSpec {
  std::string problem = "lex";
  /// Block i takes values 0..block_domain[i]-1.
  std::vector<std::size_t> block_domain;
  /// R(x, y).
  std::function<bool(Blocks y)> existence_check;
  /// True iff no z < y[block] (canonical order) with any completion of the
  /// later blocks makes (y[0..block), z, ...) a solution. `certificate` is
  /// whatever prefix_certify produced for this block.
  std::function<bool(Blocks y, std::size_t block, std::string_view certificate)> prefix_nonexistence_check;
  /// Optional prover-side certificate producer; empty certificates if unset.
  std::function<std::string(Blocks y, std::size_t block)> prefix_certify;
  /// Strict total order on a block's values; natural order if unset.
  std::function<bool(std::size_t, std::size_t)> block_less;
  /// Canonical payload for a solution; `solution: y_1 .. y_k` if unset.
  std::function<std::string(Blocks y)> render;

  std::size_t block_count() const { return block_domain.size(); }
};

/// Exhaustive co-nondeterministic check built from existence_check alone.
std::function<bool(Blocks, std::size_t, std::string_view)> brute_force_prefix_check(const LexSearchSpec& spec);

/// Lex-first solution by enumeration in canonical order.
std::optional<std::vector<std::size_t>> lex_first_solution(const LexSearchSpec& spec);

struct ProtocolPair {
  std::unique_ptr<Prover> prover;
  std::unique_ptr<Verifier> verifier;
};

/// Handles are bound to `instance`; calling them with different instance
/// text throws ConfigError. Throws ConfigError for k = 0, an empty block
/// domain, or a missing existence/prefix check.
ProtocolPair compose_lex_first(LexSearchSpec spec, std::string instance);

}  // namespace psd

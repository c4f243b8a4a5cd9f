#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psd/core/lex_composer.hpp"
#include "psd/core/problem.hpp"

namespace psd::kclique {

/// Undirected simple graph on 1..n with k in {3, 4}.
struct Instance {
  std::size_t n = 0, k = 3;
  std::vector<std::uint8_t> adj;  // n*n

  bool adjacent(std::size_t u, std::size_t v) const { return adj[u * n + v] != 0; }
  /// Throws ParseError, including for k outside {3, 4} or n > 64.
  static Instance parse(std::string_view text);
  std::string serialize() const;
};

/// k blocks over 0..n-1; a solution is a strictly increasing clique.
LexSearchSpec search_spec(const Instance& x);

std::string render(const std::vector<std::size_t>& clique);

const Problem& problem();

}  // namespace psd::kclique

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psd/core/problem.hpp"

namespace psd::hittingset {

using Set = std::vector<std::int64_t>;  // sorted, duplicate-free

/// Collections S and T; find the first S_s meeting every T_t.
struct Instance {
  std::vector<Set> S, T;

  /// m = sum |S_s| + sum |T_t|.
  std::size_t size() const;
  /// Throws ParseError. Sets are one per line, `-` for the empty set.
  static Instance parse(std::string_view text);
  std::string serialize() const;
};

bool intersects(const Set& x, const Set& y);
/// First t with S_s ∩ T_t empty, if any.
std::optional<std::size_t> first_miss(const Instance& x, std::size_t s);
/// 0-based index of the first hitting set.
std::optional<std::size_t> first_hitting(const Instance& x);

std::string render(const Instance& x, std::size_t s);

const Problem& problem();

}  // namespace psd::hittingset

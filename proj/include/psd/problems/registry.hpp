#pragma once

#include <span>
#include <string_view>

#include "psd/core/problem.hpp"

namespace psd {

/// lp, threesum, hittingset, ov, zwt, fomc, kclique.
std::span<const Problem* const> problems();

/// Throws ConfigError for an unknown tag.
const Problem& problem_by_tag(std::string_view tag);

}  // namespace psd

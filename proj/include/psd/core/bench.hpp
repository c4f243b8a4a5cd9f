#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "psd/core/problem.hpp"

namespace psd {

struct BenchRow {
  std::size_t size = 0;
  double prover_median = 0;    // seconds
  double verifier_median = 0;  // seconds
};

struct BenchReport {
  std::vector<BenchRow> rows;
  double prover_slope = 0;  // least-squares slope of log time on log size
  double verifier_slope = 0;
};

/// Per size: one discarded warm-up run, then `runs` timed honest runs, each
/// on a fresh bench instance and prover seed derived from `seed`.
/// Throws ConfigError for runs = 0 or fewer than two sizes.
BenchReport run_bench(const Problem& problem, std::span<const std::size_t> ladder, std::size_t runs,
                      std::uint64_t seed);

double loglog_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace psd

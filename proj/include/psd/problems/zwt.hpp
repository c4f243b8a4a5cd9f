#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psd/core/problem.hpp"

namespace psd::zwt {

/// Complete graph on n vertices with symmetric integer weights.
struct Instance {
  std::size_t n = 0;
  std::vector<std::int64_t> w;  // n*n, row-major, zero diagonal

  std::int64_t weight(std::size_t i, std::size_t j) const { return w[i * n + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t v) { w[i * n + j] = w[j * n + i] = v; }
  /// Largest |e(i,j)|.
  std::int64_t max_weight() const;
  /// Every pair exactly once as `i j w`, 1-based; throws ParseError.
  static Instance parse(std::string_view text);
  std::string serialize() const;
};

/// 0-based vertices, a < b < c.
struct Triangle {
  std::size_t a = 0, b = 0, c = 0;
  auto operator<=>(const Triangle&) const = default;
};

/// Nonexistence certificate for triangles whose least vertex is < limit.
struct ModPCert {
  std::uint64_t p = 0;
  std::uint64_t count = 0;
  std::vector<Triangle> triangles;  // strictly lex-increasing false positives
};

/// ceil(2 * C(n,3) * ceil(log2(3W+1)) / ceil(n^1.5)).
std::uint64_t threshold(const Instance& x);

/// Triangles a < b < c with a < limit and weight = 0 mod p.
std::uint64_t count_mod_p(const Instance& x, std::uint64_t p, std::size_t limit);
inline std::uint64_t count_mod_p(const Instance& x, std::uint64_t p) { return count_mod_p(x, p, x.n); }

/// Throws RetryExhausted after 64 oversized primes, InternalError on a true zero triangle.
ModPCert prove_nonexistence(const Instance& x, std::size_t limit, RandomStream& rng);
std::optional<std::string> check_nonexistence(const Instance& x, std::size_t limit, const ModPCert& cert);

std::optional<Triangle> lex_first(const Instance& x);
std::string render(const Triangle& t);

const Problem& problem();

}  // namespace psd::zwt

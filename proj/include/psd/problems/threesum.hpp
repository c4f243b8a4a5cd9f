#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psd/core/problem.hpp"

namespace psd::threesum {

/// Three lists of common length n; every |entry| < magnitude_bound(n).
struct Instance {
  std::vector<std::int64_t> a, b, c;

  std::size_t n() const { return a.size(); }
  /// Throws ParseError.
  static Instance parse(std::string_view text);
  std::string serialize() const;
};

/// 0-based index triple.
struct Triple {
  std::size_t i = 0, j = 0, k = 0;
  auto operator<=>(const Triple&) const = default;
};

/// Modular nonexistence certificate for the rows a_0..a_{prefix-1}: every
/// triple whose sum vanishes mod p, all of them false positives.
struct ModPCert {
  std::uint64_t p = 0;
  std::uint64_t count = 0;      // claimed; must equal triples.size()
  std::vector<Triple> triples;  // strictly lex-increasing
};

std::int64_t magnitude_bound(std::size_t n);
/// ceil(n^1.5): the pool is the first pool_size(n) primes.
std::size_t pool_size(std::size_t n);
/// ceil(n^1.5) * bit_width(n)^2.
std::size_t threshold(std::size_t n);

/// Exact count of (i < prefix, j, k) with a_i + b_j + c_k = 0 mod p, via
/// residue histograms and exact convolution.
std::uint64_t count_mod_p(const Instance& x, std::size_t prefix, std::uint64_t p);

/// All mod-p zero triples among rows < prefix in lex order, or nullopt once
/// more than `cap` are found. Throws InternalError on a true zero triple.
std::optional<std::vector<Triple>> list_mod_p(const Instance& x, std::size_t prefix, std::uint64_t p, std::size_t cap);

/// Honest prover: draws pool primes until one stays under the threshold.
/// Throws RetryExhausted after 64 oversized draws.
ModPCert prove_nonexistence(const Instance& x, std::size_t prefix, RandomStream& rng);

/// nullopt when accepted, else the failing check's tag.
std::optional<std::string> check_nonexistence(const Instance& x, std::size_t prefix, const ModPCert& cert);

/// Lex-first zero triple by sorted search.
std::optional<Triple> lex_first(const Instance& x);

std::string render(const Instance& x, const Triple& t);

const Problem& problem();

}  // namespace psd::threesum

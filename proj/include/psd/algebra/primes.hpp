#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace psd::algebra {

/// Deterministic for every 64-bit input (Miller-Rabin, first 12 prime bases).
bool is_prime(std::uint64_t n);

/// The first k primes, ascending. k must be positive.
std::vector<std::uint64_t> primes_first(std::size_t k);

/// All primes <= limit.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

}  // namespace psd::algebra

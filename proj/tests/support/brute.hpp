#pragma once

// Test-side brute-force counters, independent of the library's fast paths.

#include <cstdint>
#include <vector>

#include "psd/problems/threesum.hpp"
#include "psd/problems/zwt.hpp"

namespace psd::testing {

inline std::uint64_t brute_threesum_count(const threesum::Instance& x, std::size_t prefix, std::uint64_t p) {
  std::uint64_t count = 0;
  auto P = static_cast<std::int64_t>(p);
  for (std::size_t i = 0; i < prefix; ++i)
    for (std::size_t j = 0; j < x.n(); ++j)
      for (std::size_t k = 0; k < x.n(); ++k)
        if ((x.a[i] + x.b[j] + x.c[k]) % P == 0) ++count;
  return count;
}

inline std::uint64_t brute_zwt_count(const zwt::Instance& x, std::uint64_t p) {
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < x.n; ++a)
    for (std::size_t b = a + 1; b < x.n; ++b)
      for (std::size_t c = b + 1; c < x.n; ++c) {
        __int128 s = (__int128)x.weight(a, b) + x.weight(a, c) + x.weight(b, c);
        if (s % (__int128)p == 0) ++count;
      }
  return count;
}

inline bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace psd::testing

#include "psd/algebra/primes.hpp"

#include <cmath>

#include "psd/core/errors.hpp"

namespace psd::algebra {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  out.push_back(2);
  // Index i stands for the odd number 2i+1.
  std::size_t half = static_cast<std::size_t>((limit - 1) / 2) + 1;
  std::vector<std::uint8_t> composite(half, 0);
  for (std::size_t i = 1; i < half; ++i) {
    if (composite[i]) continue;
    std::uint64_t p = 2 * i + 1;
    out.push_back(p);
    for (std::uint64_t j = p * p / 2; j < half; j += p) composite[j] = 1;
  }
  return out;
}

std::vector<std::uint64_t> primes_first(std::size_t k) {
  if (k == 0) throw ConfigError("primes_first: k must be positive");
  double kd = static_cast<double>(k);
  // p_k < k(ln k + ln ln k) for k >= 6.
  std::uint64_t bound = k < 6 ? 15 : static_cast<std::uint64_t>(kd * (std::log(kd) + std::log(std::log(kd)))) + 1;
  auto primes = primes_up_to(bound);
  primes.resize(k);
  return primes;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

}  // namespace psd::algebra

#include "psd/algebra/prime_field.hpp"

#include <stdexcept>
#include <string>

#include "psd/algebra/primes.hpp"
#include "psd/core/errors.hpp"

namespace psd::algebra {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p) || p >= (std::uint64_t{1} << 63))
    throw ConfigError("field modulus must be a prime below 2^63, got " + std::to_string(p));
}

FpElem PrimeField::from_int(std::int64_t k) const {
  auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = k % p;
  return {static_cast<std::uint64_t>(r < 0 ? r + p : r)};
}

FpElem PrimeField::pow(Elem a, std::uint64_t e) const { return {pow_mod(a.value, e, p_)}; }

FpElem PrimeField::inv(Elem a) const {
  if (a.value == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

}  // namespace psd::algebra

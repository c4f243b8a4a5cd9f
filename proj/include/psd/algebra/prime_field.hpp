#pragma once

#include <cstdint>

#include "psd/core/random.hpp"

namespace psd::algebra {

struct FpElem {
  std::uint64_t value = 0;
  friend bool operator==(const FpElem&, const FpElem&) = default;
};

/// F_p for a prime p < 2^63. Elements are reduced representatives.
class PrimeField {
 public:
  using Elem = FpElem;

  /// Throws ConfigError unless p is prime.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  Elem zero() const { return {0}; }
  Elem one() const { return {1 % p_}; }
  Elem from_uint(std::uint64_t k) const { return {k % p_}; }
  Elem from_int(std::int64_t k) const;

  Elem add(Elem a, Elem b) const {
    std::uint64_t s = a.value + b.value;
    return {s >= p_ ? s - p_ : s};
  }
  Elem sub(Elem a, Elem b) const { return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value}; }
  Elem neg(Elem a) const { return {a.value ? p_ - a.value : 0}; }
  Elem mul(Elem a, Elem b) const {
    return {static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.value) * b.value % p_)};
  }
  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  bool is_zero(Elem a) const { return a.value == 0; }
  bool equal(Elem a, Elem b) const { return a.value == b.value; }
  bool contains(std::uint64_t v) const { return v < p_; }

  Elem random(RandomStream& rng) const { return {rng.below(p_)}; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

}  // namespace psd::algebra

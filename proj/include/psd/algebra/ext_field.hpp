#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "psd/algebra/irreducible.hpp"
#include "psd/algebra/prime_field.hpp"
#include "psd/core/random.hpp"

namespace psd::algebra {

/// Element of F_{p^l}: exactly l residues, ascending powers of the generator.
struct ExtElem {
  std::vector<std::uint64_t> coeffs;
  friend bool operator==(const ExtElem&, const ExtElem&) = default;
};

/// F_p[t] / (f) for a monic irreducible f of degree l. Copies share state.
class ExtField {
 public:
  using Elem = ExtElem;

  /// Throws ConfigError unless the modulus is monic and irreducible over base.
  ExtField(const PrimeField& base, const FpPolynomial& modulus);
  static ExtField random(const PrimeField& base, std::size_t l, RandomStream& rng);

  const PrimeField& base() const { return data_->base; }
  const FpPolynomial& modulus() const { return data_->modulus; }
  std::size_t degree() const { return data_->l; }

  Elem zero() const { return {std::vector<std::uint64_t>(degree(), 0)}; }
  Elem one() const { return from_uint(1); }
  Elem from_uint(std::uint64_t k) const;
  Elem embed(FpElem a) const { return from_uint(a.value); }
  /// Validates length l and every residue < p; throws std::invalid_argument.
  Elem from_coeffs(std::span<const std::uint64_t> coeffs) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  /// Throws std::domain_error on zero.
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const;
  bool equal(const Elem& a, const Elem& b) const { return a.coeffs == b.coeffs; }

  Elem random(RandomStream& rng) const;

 private:
  struct Data {
    PrimeField base;
    FpPolynomial modulus;
    std::size_t l;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace psd::algebra

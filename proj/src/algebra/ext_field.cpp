#include "psd/algebra/ext_field.hpp"

#include <stdexcept>

#include "psd/core/errors.hpp"

namespace psd::algebra {

ExtField::ExtField(const PrimeField& base, const FpPolynomial& modulus) {
  if (!(modulus.field() == base)) throw ConfigError("extension modulus over the wrong base field");
  if (modulus.degree() < 1 || !modulus.is_monic()) throw ConfigError("extension modulus must be monic of degree >= 1");
  if (!check_irreducible(modulus)) throw ConfigError("extension modulus is reducible");
  data_ = std::make_shared<const Data>(Data{base, modulus, static_cast<std::size_t>(modulus.degree())});
}

ExtField ExtField::random(const PrimeField& base, std::size_t l, RandomStream& rng) {
  return ExtField(base, find_irreducible(base, l, rng));
}

ExtElem ExtField::from_uint(std::uint64_t k) const {
  Elem e = zero();
  e.coeffs[0] = k % base().modulus();
  return e;
}

ExtElem ExtField::from_coeffs(std::span<const std::uint64_t> coeffs) const {
  if (coeffs.size() != degree()) throw std::invalid_argument("extension element has the wrong length");
  for (auto c : coeffs)
    if (!base().contains(c)) throw std::invalid_argument("extension coefficient out of range");
  return {std::vector<std::uint64_t>(coeffs.begin(), coeffs.end())};
}

ExtElem ExtField::add(const Elem& a, const Elem& b) const {
  const PrimeField& f = base();
  Elem r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = f.add({a.coeffs[i]}, {b.coeffs[i]}).value;
  return r;
}

ExtElem ExtField::sub(const Elem& a, const Elem& b) const {
  const PrimeField& f = base();
  Elem r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = f.sub({a.coeffs[i]}, {b.coeffs[i]}).value;
  return r;
}

ExtElem ExtField::neg(const Elem& a) const {
  Elem r = a;
  for (auto& c : r.coeffs) c = base().neg({c}).value;
  return r;
}

bool ExtField::is_zero(const Elem& a) const {
  for (auto c : a.coeffs)
    if (c) return false;
  return true;
}

ExtElem ExtField::mul(const Elem& a, const Elem& b) const {
  const PrimeField& f = base();
  std::size_t l = degree();
  std::vector<FpElem> prod(2 * l - 1, f.zero());
  for (std::size_t i = 0; i < l; ++i) {
    if (!a.coeffs[i]) continue;
    for (std::size_t j = 0; j < l; ++j) prod[i + j] = f.add(prod[i + j], f.mul({a.coeffs[i]}, {b.coeffs[j]}));
  }
  // Reduce with t^l = -(f_0 + ... + f_{l-1} t^{l-1}).
  const auto& m = modulus().coefficients();
  for (std::size_t i = prod.size(); i-- > l;) {
    FpElem top = prod[i];
    if (f.is_zero(top)) continue;
    for (std::size_t j = 0; j < l; ++j) prod[i - l + j] = f.sub(prod[i - l + j], f.mul(top, m[j]));
  }
  Elem r;
  r.coeffs.resize(l);
  for (std::size_t i = 0; i < l; ++i) r.coeffs[i] = prod[i].value;
  return r;
}

ExtElem ExtField::inv(const Elem& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero in extension field");
  const PrimeField& f = base();
  std::vector<FpElem> ac;
  for (auto c : a.coeffs) ac.push_back({c});
  // Extended Euclid: s*a = g mod modulus, g a nonzero constant.
  FpPolynomial r0 = modulus(), r1(f, std::move(ac));
  FpPolynomial s0(f), s1 = FpPolynomial::constant(f, f.one());
  while (r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    FpPolynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  FpPolynomial inverse = s1.scaled(f.inv(r1.coeff(0))) % modulus();
  Elem out = zero();
  for (std::size_t i = 0; i < degree(); ++i) out.coeffs[i] = inverse.coeff(i).value;
  return out;
}

ExtElem ExtField::random(RandomStream& rng) const {
  Elem e = zero();
  for (auto& c : e.coeffs) c = rng.below(base().modulus());
  return e;
}

}  // namespace psd::algebra

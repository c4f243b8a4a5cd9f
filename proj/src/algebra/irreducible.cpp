#include "psd/algebra/irreducible.hpp"

#include <stdexcept>

namespace psd::algebra {

bool check_irreducible(const FpPolynomial& f) {
  if (f.degree() < 1 || !f.is_monic()) throw std::invalid_argument("check_irreducible: need a monic polynomial of degree >= 1");
  const PrimeField& fld = f.field();
  auto l = static_cast<std::size_t>(f.degree());
  const FpPolynomial x = FpPolynomial::monomial(fld, fld.one(), 1) % f;
  FpPolynomial h = x;
  for (std::size_t i = 1; i <= l; ++i) {
    h = powmod(h, fld.modulus(), f);
    if (2 * i <= l && gcd(h - x, f).degree() != 0) return false;
  }
  return h == x;
}

FpPolynomial find_irreducible(const PrimeField& field, std::size_t l, RandomStream& rng) {
  if (l == 0) throw std::invalid_argument("find_irreducible: degree must be positive");
  for (;;) {
    std::vector<FpElem> c(l + 1);
    for (std::size_t i = 0; i < l; ++i) c[i] = field.random(rng);
    c[l] = field.one();
    FpPolynomial f(field, std::move(c));
    if (check_irreducible(f)) return f;
  }
}

}  // namespace psd::algebra

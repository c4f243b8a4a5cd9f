#pragma once

#include <cstddef>

#include "psd/algebra/polynomial.hpp"
#include "psd/algebra/prime_field.hpp"
#include "psd/core/random.hpp"

namespace psd::algebra {

using FpPolynomial = DensePolynomial<PrimeField>;

/// Ben-Or test: gcd(f, x^{p^i} - x) = 1 for i <= l/2, plus x^{p^l} = x mod f.
/// Throws std::invalid_argument unless f is monic of degree >= 1.
bool check_irreducible(const FpPolynomial& f);

/// Samples random monic degree-l polynomials from rng until one passes.
FpPolynomial find_irreducible(const PrimeField& field, std::size_t l, RandomStream& rng);

}  // namespace psd::algebra

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "psd/algebra/irreducible.hpp"
#include "psd/algebra/prime_field.hpp"
#include "psd/core/problem.hpp"
#include "psd/core/random.hpp"

namespace psd::ov {

/// n vectors in {0,1}^d.
struct Instance {
  std::size_t n = 0, d = 0;
  std::vector<std::vector<std::uint8_t>> v;

  bool orthogonal(std::size_t i, std::size_t j) const;
  bool is_zero(std::size_t j) const;
  /// Throws ParseError.
  static Instance parse(std::string_view text);
  std::string serialize() const;
};

/// p: smallest prime above n^2 d. l: smallest with p^l > 2d n^3, so that
/// deg Q / p^l <= 1/n^2.
struct FieldParams {
  std::uint64_t p = 0;
  std::size_t l = 0;
};
FieldParams field_params(std::size_t n, std::size_t d);

/// Degree bound d(n-1) of Q.
std::size_t degree_bound(const Instance& x);

/// Q(x) = sum_u prod_i (1 - u_i psi_i(x)), psi_i interpolating coordinate i
/// through the nodes a_j = j. Q(a_j) counts the u with <u, v^j> = 0.
/// Throws ConfigError unless p > n^2 d.
algebra::FpPolynomial build_polynomial(const Instance& x, const algebra::PrimeField& field);

/// Coefficients of Q over F_{p^l}, l residues each, ascending degree.
struct CountCert {
  std::uint64_t p = 0;
  std::size_t l = 0;
  std::vector<std::uint64_t> modulus;  // l + 1 residues, monic
  std::vector<std::uint64_t> coefficients;
};

CountCert prove_counts(const Instance& x, RandomStream& rng);

struct CountCheck {
  std::optional<std::vector<std::uint64_t>> counts;  // Q(a_1..a_n) on acceptance
  std::string reason;                                // failure tag otherwise
};

/// Checks the modulus, compares Q(r) at a random r in F_{p^l} against the
/// direct sum, then evaluates Q at every node.
CountCheck certify_counts(const Instance& x, const CountCert& cert, RandomStream& rng);

/// 0-based lex-first orthogonal pair (i < j) by direct inner products.
std::optional<std::pair<std::size_t, std::size_t>> lex_first_pair(const Instance& x);

std::string render(std::size_t i, std::size_t j);

const Problem& problem();

}  // namespace psd::ov

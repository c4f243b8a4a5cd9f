#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace psd::algebra {

using BigInt = mpz_class;
/// Always kept canonical: positive denominator, reduced.
using BigRational = mpq_class;

/// Strict base-10, optional leading '-'. Throws ParseError.
BigInt parse_bigint(std::string_view token);
/// "a" or "a/b" with b > 0; the result is reduced. Throws ParseError.
BigRational parse_rational(std::string_view token);

std::string to_string(const BigInt& value);
/// "a" when the denominator is 1, else "a/b".
std::string to_string(const BigRational& value);

BigInt pow2(std::size_t exponent);
/// Smallest k with 2^k >= x; 0 for x <= 1.
std::size_t ceil_log2(const BigInt& x);

}  // namespace psd::algebra

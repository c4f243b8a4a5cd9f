#include "psd/algebra/rational.hpp"

#include "psd/core/errors.hpp"

namespace psd::algebra {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view token) {
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits)) throw ParseError("not an integer: '" + std::string(token) + "'");
  return BigInt(std::string(token), 10);
}

BigRational parse_rational(std::string_view token) {
  auto slash = token.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_bigint(token));
  BigInt num = parse_bigint(token.substr(0, slash));
  std::string_view den_text = token.substr(slash + 1);
  if (!all_digits(den_text)) throw ParseError("bad denominator: '" + std::string(token) + "'");
  BigInt den(std::string(den_text), 10);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(token) + "'");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::string to_string(const BigRational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

BigInt pow2(std::size_t exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, exponent);
  return r;
}

std::size_t ceil_log2(const BigInt& x) {
  if (x <= 1) return 0;
  BigInt y = x - 1;
  return mpz_sizeinbase(y.get_mpz_t(), 2);
}

}  // namespace psd::algebra

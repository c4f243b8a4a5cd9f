#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "psd/algebra/field.hpp"

namespace psd::algebra {

namespace poly_detail {

inline constexpr std::size_t kKaratsubaCutoff = 32;
inline constexpr std::size_t kNewtonCutoff = 64;

template <class F>
using Coeffs = std::vector<typename F::Elem>;

template <class F>
void trim(const F& f, Coeffs<F>& c) {
  while (!c.empty() && f.is_zero(c.back())) c.pop_back();
}

template <class F>
Coeffs<F> schoolbook(const F& f, std::span<const typename F::Elem> a, std::span<const typename F::Elem> b) {
  if (a.empty() || b.empty()) return {};
  Coeffs<F> r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  return r;
}

template <class F>
void add_into(const F& f, Coeffs<F>& dst, std::span<const typename F::Elem> src, std::size_t shift) {
  if (dst.size() < src.size() + shift) dst.resize(src.size() + shift, f.zero());
  for (std::size_t i = 0; i < src.size(); ++i) dst[i + shift] = f.add(dst[i + shift], src[i]);
}

template <class F>
Coeffs<F> karatsuba(const F& f, std::span<const typename F::Elem> a, std::span<const typename F::Elem> b) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) <= kKaratsubaCutoff) return schoolbook(f, a, b);
  if (a.size() < b.size()) std::swap(a, b);
  std::size_t m = a.size() / 2;
  auto a0 = a.subspan(0, m), a1 = a.subspan(m);
  if (b.size() <= m) {
    // Unbalanced: split only the longer operand.
    Coeffs<F> r = karatsuba(f, a0, b);
    add_into(f, r, std::span<const typename F::Elem>(karatsuba(f, a1, b)), m);
    return r;
  }
  auto b0 = b.subspan(0, m), b1 = b.subspan(m);
  Coeffs<F> z0 = karatsuba(f, a0, b0);
  Coeffs<F> z2 = karatsuba(f, a1, b1);
  Coeffs<F> sa(a0.begin(), a0.end()), sb(b0.begin(), b0.end());
  add_into(f, sa, a1, 0);
  add_into(f, sb, b1, 0);
  Coeffs<F> z1 = karatsuba(f, std::span<const typename F::Elem>(sa), std::span<const typename F::Elem>(sb));
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = f.sub(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = f.sub(z1[i], z2[i]);
  Coeffs<F> r = std::move(z0);
  add_into(f, r, std::span<const typename F::Elem>(z1), m);
  add_into(f, r, std::span<const typename F::Elem>(z2), 2 * m);
  return r;
}

}  // namespace poly_detail

/// Polynomial with coefficients in ascending degree order, never storing a
/// zero leading coefficient.
template <FieldContext F>
class DensePolynomial {
 public:
  using Field = F;
  using Elem = typename F::Elem;

  explicit DensePolynomial(F field) : field_(std::move(field)) {}
  DensePolynomial(F field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    poly_detail::trim(field_, c_);
  }

  static DensePolynomial constant(const F& f, Elem c) { return DensePolynomial(f, {std::move(c)}); }
  static DensePolynomial monomial(const F& f, Elem c, std::size_t degree) {
    std::vector<Elem> v(degree + 1, f.zero());
    v[degree] = std::move(c);
    return DensePolynomial(f, std::move(v));
  }
  /// x - a
  static DensePolynomial linear_root(const F& f, const Elem& a) { return DensePolynomial(f, {f.neg(a), f.one()}); }

  const F& field() const { return field_; }
  const std::vector<Elem>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(c_.size()) - 1; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  Elem leading() const { return c_.empty() ? field_.zero() : c_.back(); }
  bool is_monic() const { return !c_.empty() && field_.equal(c_.back(), field_.one()); }

  Elem evaluate(const Elem& x) const {
    Elem acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
    return acc;
  }

  DensePolynomial scaled(const Elem& s) const {
    std::vector<Elem> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(field_.mul(a, s));
    return DensePolynomial(field_, std::move(v));
  }
  DensePolynomial monic() const {
    if (c_.empty()) return *this;
    return scaled(field_.inv(c_.back()));
  }
  /// Coefficients below x^k.
  DensePolynomial truncated(std::size_t k) const {
    return DensePolynomial(field_, std::vector<Elem>(c_.begin(), c_.begin() + std::min(k, c_.size())));
  }

  friend DensePolynomial operator+(const DensePolynomial& a, const DensePolynomial& b) {
    std::vector<Elem> v = a.c_;
    poly_detail::add_into(a.field_, v, std::span<const Elem>(b.c_), 0);
    return DensePolynomial(a.field_, std::move(v));
  }
  friend DensePolynomial operator-(const DensePolynomial& a, const DensePolynomial& b) {
    const F& f = a.field_;
    std::vector<Elem> v = a.c_;
    if (v.size() < b.c_.size()) v.resize(b.c_.size(), f.zero());
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = f.sub(v[i], b.c_[i]);
    return DensePolynomial(f, std::move(v));
  }
  friend DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b) {
    return DensePolynomial(a.field_, poly_detail::karatsuba(a.field_, std::span<const Elem>(a.c_),
                                                            std::span<const Elem>(b.c_)));
  }
  friend bool operator==(const DensePolynomial& a, const DensePolynomial& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!a.field_.equal(a.c_[i], b.c_[i])) return false;
    return true;
  }

 private:
  F field_;
  std::vector<Elem> c_;
};

/// g with f*g = 1 mod x^k; requires f(0) != 0.
template <FieldContext F>
DensePolynomial<F> inverse_series(const DensePolynomial<F>& f, std::size_t k) {
  const F& fld = f.field();
  if (fld.is_zero(f.coeff(0))) throw std::domain_error("inverse_series: zero constant term");
  DensePolynomial<F> g = DensePolynomial<F>::constant(fld, fld.inv(f.coeff(0)));
  std::size_t len = 1;
  while (len < k) {
    len = std::min(2 * len, k);
    DensePolynomial<F> e = (f.truncated(len) * g).truncated(len);
    e = DensePolynomial<F>::constant(fld, fld.from_uint(2)) - e;
    g = (g * e).truncated(len);
  }
  return g;
}

/// Quotient and remainder; throws std::domain_error for a zero divisor.
template <FieldContext F>
std::pair<DensePolynomial<F>, DensePolynomial<F>> divmod(const DensePolynomial<F>& a, const DensePolynomial<F>& b) {
  using P = DensePolynomial<F>;
  const F& f = a.field();
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {P(f), a};
  auto n = static_cast<std::size_t>(a.degree());
  auto m = static_cast<std::size_t>(b.degree());
  std::size_t k = n - m + 1;
  if (m < poly_detail::kNewtonCutoff || k < poly_detail::kNewtonCutoff) {
    std::vector<typename F::Elem> r = a.coefficients();
    std::vector<typename F::Elem> q(k, f.zero());
    auto lead_inv = f.inv(b.leading());
    const auto& bc = b.coefficients();
    for (std::size_t i = k; i-- > 0;) {
      auto coef = f.mul(r[i + m], lead_inv);
      q[i] = coef;
      if (f.is_zero(coef)) continue;
      for (std::size_t j = 0; j <= m; ++j) r[i + j] = f.sub(r[i + j], f.mul(coef, bc[j]));
    }
    r.resize(m);
    return {P(f, std::move(q)), P(f, std::move(r))};
  }
  // Reversal trick: rev(q) = rev(a) / rev(b) mod x^k.
  std::vector<typename F::Elem> ra(a.coefficients().rbegin(), a.coefficients().rend());
  std::vector<typename F::Elem> rb(b.coefficients().rbegin(), b.coefficients().rend());
  P inv = inverse_series(P(f, std::move(rb)), k);
  P rq = (P(f, std::move(ra)).truncated(k) * inv).truncated(k);
  std::vector<typename F::Elem> qc = rq.coefficients();
  qc.resize(k, f.zero());
  std::reverse(qc.begin(), qc.end());
  P q(f, std::move(qc));
  P r = a - q * b;
  return {std::move(q), std::move(r)};
}

template <FieldContext F>
DensePolynomial<F> operator%(const DensePolynomial<F>& a, const DensePolynomial<F>& b) {
  return divmod(a, b).second;
}

template <FieldContext F>
DensePolynomial<F> operator/(const DensePolynomial<F>& a, const DensePolynomial<F>& b) {
  return divmod(a, b).first;
}

/// Monic gcd (zero if both are zero).
template <FieldContext F>
DensePolynomial<F> gcd(DensePolynomial<F> a, DensePolynomial<F> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// base^e mod m.
template <FieldContext F>
DensePolynomial<F> powmod(DensePolynomial<F> base, std::uint64_t e, const DensePolynomial<F>& m) {
  const F& f = m.field();
  DensePolynomial<F> result = DensePolynomial<F>::constant(f, f.one()) % m;
  base = base % m;
  while (e) {
    if (e & 1) result = (result * base) % m;
    e >>= 1;
    if (e) base = (base * base) % m;
  }
  return result;
}

/// Values of p at every node, by remaindering down a subproduct tree.
template <FieldContext F>
std::vector<typename F::Elem> multipoint_eval(const DensePolynomial<F>& p, std::span<const typename F::Elem> nodes) {
  using P = DensePolynomial<F>;
  const F& f = p.field();
  std::vector<typename F::Elem> out(nodes.size(), f.zero());
  if (nodes.empty() || p.is_zero()) return out;

  std::vector<std::vector<P>> tree;
  tree.emplace_back();
  for (const auto& x : nodes) tree[0].push_back(P::linear_root(f, x));
  while (tree.back().size() > 1) {
    const auto& below = tree.back();
    std::vector<P> level;
    for (std::size_t i = 0; i + 1 < below.size(); i += 2) level.push_back(below[i] * below[i + 1]);
    if (below.size() % 2) level.push_back(below.back());
    tree.push_back(std::move(level));
  }

  std::vector<P> rem{p % tree.back()[0]};
  for (std::size_t lvl = tree.size() - 1; lvl-- > 0;) {
    const auto& nodes_here = tree[lvl];
    std::vector<P> next;
    next.reserve(nodes_here.size());
    for (std::size_t i = 0; i < nodes_here.size(); ++i) next.push_back(rem[i / 2] % nodes_here[i]);
    rem = std::move(next);
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) out[i] = rem[i].coeff(0);
  return out;
}

/// Unique polynomial of degree < k through k points; duplicate nodes throw
/// std::invalid_argument. Quadratic Lagrange construction.
template <FieldContext F>
DensePolynomial<F> interpolate(const F& f, std::span<const typename F::Elem> xs, std::span<const typename F::Elem> ys) {
  using Elem = typename F::Elem;
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: node/value count mismatch");
  std::size_t k = xs.size();
  // master(x) = prod (x - x_i)
  std::vector<Elem> master{f.one()};
  for (const auto& x : xs) {
    std::vector<Elem> next(master.size() + 1, f.zero());
    for (std::size_t j = 0; j < master.size(); ++j) {
      next[j + 1] = f.add(next[j + 1], master[j]);
      next[j] = f.sub(next[j], f.mul(master[j], x));
    }
    master = std::move(next);
  }
  std::vector<Elem> result(k, f.zero());
  std::vector<Elem> q(k, f.zero());
  for (std::size_t i = 0; i < k; ++i) {
    // q = master / (x - x_i), synthetic division from the top.
    Elem carry = f.zero();
    for (std::size_t j = k; j-- > 0;) {
      carry = f.add(master[j + 1], f.mul(carry, xs[i]));
      q[j] = carry;
    }
    Elem denom = f.zero();
    for (std::size_t j = k; j-- > 0;) denom = f.add(f.mul(denom, xs[i]), q[j]);
    if (f.is_zero(denom)) throw std::invalid_argument("interpolate: duplicate node");
    Elem scale = f.mul(ys[i], f.inv(denom));
    for (std::size_t j = 0; j < k; ++j) result[j] = f.add(result[j], f.mul(scale, q[j]));
  }
  return DensePolynomial<F>(f, std::move(result));
}

}  // namespace psd::algebra

#include "psd/algebra/convolution.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "psd/algebra/primes.hpp"
#include "psd/core/errors.hpp"

namespace psd::algebra {
namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::array<u32, 3> kPrimes = {2013265921u, 469762049u, 1811939329u};
constexpr std::size_t kMaxLength = std::size_t{1} << 26;
constexpr std::size_t kSchoolbookCutoff = 16;

// Montgomery form with R = 2^32.
struct Montgomery {
  u32 mod;
  u32 neg_inv;  // -mod^{-1} mod 2^32
  u32 r2;       // 2^64 mod mod

  explicit Montgomery(u32 m) : mod(m) {
    u32 inv = m;
    for (int i = 0; i < 5; ++i) inv *= 2 - m * inv;
    neg_inv = 0u - inv;
    r2 = static_cast<u32>((u128(1) << 64) % m);
  }
  u32 reduce(u64 x) const {
    u32 q = static_cast<u32>(x) * neg_inv;
    u64 t = (x + static_cast<u64>(q) * mod) >> 32;
    return t >= mod ? static_cast<u32>(t - mod) : static_cast<u32>(t);
  }
  u32 mul(u32 a, u32 b) const { return reduce(static_cast<u64>(a) * b); }
  u32 to(u32 a) const { return mul(a, r2); }
  u32 from(u32 a) const { return reduce(a); }
  u32 add(u32 a, u32 b) const {
    u32 s = a + b;
    return s >= mod ? s - mod : s;
  }
  u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + mod - b; }
  u32 pow(u32 a, u64 e) const {
    u32 r = to(1);
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
};

u32 primitive_root(u32 p) {
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 f = 2; f * f <= m; ++f) {
    if (m % f == 0) {
      factors.push_back(f);
      while (m % f == 0) m /= f;
    }
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 f : factors)
      if (pow_mod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return static_cast<u32>(g);
  }
}

// roots[len + j] = w_{2len}^j in Montgomery form, for len = 1, 2, 4, ..., n/2.
std::vector<u32> twiddles(const Montgomery& mt, u32 g, std::size_t n, bool inverse) {
  std::vector<u32> roots(std::max<std::size_t>(n, 2));
  u32 base = mt.to(g);
  if (inverse) base = mt.pow(base, mt.mod - 2);
  for (std::size_t len = 1; len < n; len <<= 1) {
    u32 w = mt.pow(base, (mt.mod - 1) / (2 * len));
    u32 cur = mt.to(1);
    for (std::size_t j = 0; j < len; ++j) {
      roots[len + j] = cur;
      cur = mt.mul(cur, w);
    }
  }
  return roots;
}

// Gentleman-Sande: natural order in, bit-reversed out.
void forward(std::vector<u32>& a, const std::vector<u32>& roots, const Montgomery& mt) {
  std::size_t n = a.size();
  for (std::size_t len = n >> 1; len >= 1; len >>= 1) {
    const u32* w = roots.data() + len;
    for (std::size_t i = 0; i < n; i += 2 * len) {
      u32* x = a.data() + i;
      u32* y = x + len;
      for (std::size_t j = 0; j < len; ++j) {
        u32 s = x[j], t = y[j];
        x[j] = mt.add(s, t);
        y[j] = mt.mul(mt.sub(s, t), w[j]);
      }
    }
  }
}

// Cooley-Tukey: bit-reversed in, natural order out (unscaled).
void inverse(std::vector<u32>& a, const std::vector<u32>& roots, const Montgomery& mt) {
  std::size_t n = a.size();
  for (std::size_t len = 1; len < n; len <<= 1) {
    const u32* w = roots.data() + len;
    for (std::size_t i = 0; i < n; i += 2 * len) {
      u32* x = a.data() + i;
      u32* y = x + len;
      for (std::size_t j = 0; j < len; ++j) {
        u32 s = x[j], t = mt.mul(y[j], w[j]);
        x[j] = mt.add(s, t);
        y[j] = mt.sub(s, t);
      }
    }
  }
}

std::vector<u32> convolve_mod(std::span<const u64> u, std::span<const u64> v, u32 p, std::size_t n) {
  Montgomery mt(p);
  u32 g = primitive_root(p);
  std::vector<u32> a(n, 0), b(n, 0);
  for (std::size_t i = 0; i < u.size(); ++i) a[i] = mt.to(static_cast<u32>(u[i] % p));
  for (std::size_t i = 0; i < v.size(); ++i) b[i] = mt.to(static_cast<u32>(v[i] % p));
  auto fw = twiddles(mt, g, n, false);
  forward(a, fw, mt);
  forward(b, fw, mt);
  for (std::size_t i = 0; i < n; ++i) a[i] = mt.mul(a[i], b[i]);
  auto inv = twiddles(mt, g, n, true);
  inverse(a, inv, mt);
  u32 n_inv = mt.pow(mt.to(static_cast<u32>(n % p)), p - 2);
  std::size_t out = u.size() + v.size() - 1;
  std::vector<u32> r(out);
  for (std::size_t i = 0; i < out; ++i) r[i] = mt.from(mt.mul(a[i], n_inv));
  return r;
}

u128 coefficient_bound(std::span<const u64> u, std::span<const u64> v) {
  u128 su = 0, sv = 0;
  u64 mu = 0, mv = 0;
  for (u64 x : u) su += x, mu = std::max(mu, x);
  for (u64 x : v) sv += x, mv = std::max(mv, x);
  auto sat = [](u128 a, u64 b) -> u128 {
    if (b && a > ~u128(0) / b) return ~u128(0);
    return a * b;
  };
  return std::min(sat(su, mv), sat(sv, mu));
}

}  // namespace

std::vector<u64> schoolbook_convolve(std::span<const u64> u, std::span<const u64> v) {
  if (u.empty() || v.empty()) return {};
  if (coefficient_bound(u, v) > UINT64_MAX) throw InternalError("convolution result exceeds 64 bits");
  std::vector<u64> r(u.size() + v.size() - 1, 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u[i]) continue;
    for (std::size_t j = 0; j < v.size(); ++j) r[i + j] += u[i] * v[j];
  }
  return r;
}

std::vector<u64> exact_convolve(std::span<const u64> u, std::span<const u64> v) {
  if (u.empty() || v.empty()) return {};
  u128 bound = coefficient_bound(u, v);
  if (bound > UINT64_MAX) throw InternalError("convolution result exceeds 64 bits");
  if (std::min(u.size(), v.size()) <= kSchoolbookCutoff) return schoolbook_convolve(u, v);

  std::size_t out = u.size() + v.size() - 1;
  std::size_t n = std::bit_ceil(out);
  if (n > kMaxLength) throw InternalError("convolution length exceeds transform limit");

  std::size_t count = 1;
  u128 modulus = kPrimes[0];
  while (modulus <= bound) {
    if (count == kPrimes.size()) throw InternalError("convolution bound exceeds prime product");
    modulus *= kPrimes[count++];
  }

  std::vector<std::vector<u32>> residues;
  for (std::size_t k = 0; k < count; ++k) residues.push_back(convolve_mod(u, v, kPrimes[k], n));

  std::vector<u64> r(out);
  if (count == 1) {
    for (std::size_t i = 0; i < out; ++i) r[i] = residues[0][i];
    return r;
  }
  // Garner recombination.
  const u64 p0 = kPrimes[0], p1 = kPrimes[1], p2 = kPrimes[2];
  const u64 inv_p0_mod_p1 = pow_mod(p0 % p1, p1 - 2, p1);
  const u64 p01_mod_p2 = (p0 % p2) * (p1 % p2) % p2;
  const u64 inv_p01_mod_p2 = pow_mod(p01_mod_p2, p2 - 2, p2);
  for (std::size_t i = 0; i < out; ++i) {
    u64 a0 = residues[0][i], a1 = residues[1][i];
    u64 t1 = (a1 + p1 - a0 % p1) % p1 * inv_p0_mod_p1 % p1;
    u128 x = a0 + u128(p0) * t1;
    if (count == 3) {
      u64 a2 = residues[2][i];
      u64 x_mod_p2 = static_cast<u64>(x % p2);
      u64 t2 = (a2 + p2 - x_mod_p2) % p2 * inv_p01_mod_p2 % p2;
      x += u128(p0) * p1 * t2;
    }
    if (x > UINT64_MAX) throw InternalError("convolution recombination overflow");
    r[i] = static_cast<u64>(x);
  }
  return r;
}

}  // namespace psd::algebra

#include "psd/problems/ov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "psd/algebra/ext_field.hpp"
#include "psd/algebra/primes.hpp"
#include "psd/core/adversary.hpp"
#include "psd/core/errors.hpp"
#include "psd/core/text_format.hpp"

namespace psd::ov {
namespace {

using algebra::ExtElem;
using algebra::ExtField;
using algebra::FpElem;
using algebra::FpPolynomial;
using algebra::PrimeField;

constexpr std::size_t kMaxN = 1'000'000;
constexpr std::size_t kMaxD = 4096;

// Barycentric weights for the nodes 1..n: w_j = 1 / prod_{k != j} (j - k).
std::vector<FpElem> node_weights(const PrimeField& f, std::size_t n) {
  std::vector<FpElem> fact(n, f.one());
  for (std::size_t i = 1; i < n; ++i) fact[i] = f.mul(fact[i - 1], f.from_uint(i));
  std::vector<FpElem> w(n);
  for (std::size_t j = 1; j <= n; ++j) {
    FpElem denom = f.mul(fact[j - 1], fact[n - j]);
    if ((n - j) % 2) denom = f.neg(denom);
    w[j - 1] = f.inv(denom);
  }
  return w;
}

// Lagrange basis values L_1(r) .. L_n(r) with one inversion.
std::vector<ExtElem> lagrange_at(const ExtField& f, const std::vector<FpElem>& w, const ExtElem& r) {
  std::size_t n = w.size();
  std::vector<ExtElem> diff(n), prefix(n);
  for (std::size_t j = 0; j < n; ++j) {
    diff[j] = f.sub(r, f.from_uint(j + 1));
    if (f.is_zero(diff[j])) {
      std::vector<ExtElem> delta(n, f.zero());
      delta[j] = f.one();
      return delta;
    }
  }
  ExtElem acc = f.one();
  for (std::size_t j = 0; j < n; ++j) {
    prefix[j] = acc;
    acc = f.mul(acc, diff[j]);
  }
  ExtElem ell = acc;
  ExtElem inv = f.inv(acc);
  std::vector<ExtElem> out(n);
  for (std::size_t j = n; j-- > 0;) {
    ExtElem inv_j = f.mul(inv, prefix[j]);
    inv = f.mul(inv, diff[j]);
    out[j] = f.mul(f.mul(ell, f.embed(w[j])), inv_j);
  }
  return out;
}

std::string pair_text(std::optional<std::pair<std::size_t, std::size_t>> pr) {
  return pr ? std::to_string(pr->first + 1) + " " + std::to_string(pr->second + 1) : std::string("none");
}

std::string message_for(std::optional<std::pair<std::size_t, std::size_t>> pr, const CountCert& c) {
  text::Fields f;
  f.set("pair", pair_text(pr));
  f.set("prime", std::to_string(c.p));
  f.set("degree", std::to_string(c.l));
  f.set("modulus", text::join(c.modulus));
  f.set("coefficients", text::join(c.coefficients));
  return f.serialize();
}

CountCert cert_from(const text::Fields& f) {
  CountCert c;
  c.p = f.get_uint("prime");
  c.l = f.get_uint("degree");
  c.modulus = f.get_uint_list("modulus");
  c.coefficients = f.get_uint_list("coefficients");
  return c;
}

class OvProver final : public Prover {
 public:
  std::string_view problem() const override { return "ov"; }
  std::string first_message(std::string_view instance, RandomStream& rng) const override {
    Instance x = Instance::parse(instance);
    return message_for(lex_first_pair(x), prove_counts(x, rng));
  }
};

class OvVerifier final : public Verifier {
 public:
  std::string_view problem() const override { return "ov"; }
  VerifierDecision decide(std::string_view instance, std::string_view message, RandomStream& rng) const override {
    Instance x = Instance::parse(instance);
    ProtocolOutcome out = judge(x, message, rng);
    return {out, verifier_record(out)};
  }

 private:
  static ProtocolOutcome judge(const Instance& x, std::string_view message, RandomStream& rng) {
    try {
      auto f = text::Fields::parse(message);
      std::optional<std::pair<std::size_t, std::size_t>> pr;
      if (f.get("pair") != "none") {
        auto idx = f.get_uint_list("pair");
        if (idx.size() != 2) return ProtocolOutcome::bot("malformed-message");
        if (idx[0] < 1 || idx[0] >= idx[1] || idx[1] > x.n) return ProtocolOutcome::bot("index-out-of-range");
        pr = std::pair<std::size_t, std::size_t>(idx[0] - 1, idx[1] - 1);
      }
      CountCheck check = certify_counts(x, cert_from(f), rng);
      if (!check.counts) return ProtocolOutcome::bot(check.reason);
      const auto& q = *check.counts;
      std::size_t prefix = pr ? pr->first : x.n;
      for (std::size_t j = 0; j < prefix; ++j)
        if (q[j] != (x.is_zero(j) ? 1u : 0u)) return ProtocolOutcome::bot("earlier-vector-has-partner");
      if (!pr) return ProtocolOutcome::bot("certified-no-solution");
      auto [i, j] = *pr;
      if (!x.orthogonal(i, j)) return ProtocolOutcome::bot("pair-not-orthogonal");
      for (std::size_t k = i + 1; k < j; ++k)
        if (x.orthogonal(i, k)) return ProtocolOutcome::bot("earlier-partner-not-excluded");
      return ProtocolOutcome::canonical(render(i, j));
    } catch (const MalformedMessage&) {
      return ProtocolOutcome::bot("malformed-message");
    }
  }
};

class OvProblem final : public Problem {
 public:
  std::string_view tag() const override { return "ov"; }
  bool deterministic() const override { return false; }
  std::string canonicalize(std::string_view instance) const override { return Instance::parse(instance).serialize(); }
  const Prover& prover() const override { return prover_; }
  const Verifier& verifier() const override { return verifier_; }

  std::optional<std::string> oracle(std::string_view instance) const override {
    Instance x = Instance::parse(instance);
    if (x.n > 5000) throw ConfigError("ov oracle limited to n <= 5000");
    for (std::size_t i = 0; i < x.n; ++i)
      for (std::size_t j = i + 1; j < x.n; ++j) {
        bool zero = true;
        for (std::size_t t = 0; t < x.d; ++t) zero &= !(x.v[i][t] && x.v[j][t]);
        if (zero) return render(i, j);
      }
    return std::nullopt;
  }

  /// Bit density chosen so about one orthogonal pair is expected.
  std::string generate(const GenParams& p) const override {
    if (p.n == 0 || p.d == 0 || p.n > 5000 || p.d > 512) throw ConfigError("ov: need 1 <= n <= 5000, 1 <= d <= 512");
    RandomStream rng(p.seed, Role::prover);
    double pairs = std::max(1.0, double(p.n) * double(p.n - 1) / 2.0);
    double q = std::sqrt(1.0 - std::pow(1.0 / pairs, 1.0 / double(p.d)));
    q = std::clamp(q, 0.3, 0.95);
    Instance x;
    x.n = p.n;
    x.d = p.d;
    x.v.assign(p.n, std::vector<std::uint8_t>(p.d, 0));
    for (auto& row : x.v)
      for (auto& b : row) b = rng.coin(q) ? 1 : 0;
    if (p.planted && p.n >= 2) {
      std::size_t i = rng.below(p.n), j = rng.below(p.n - 1);
      if (j >= i) ++j;
      for (std::size_t t = 0; t < p.d; ++t)
        if (x.v[i][t]) x.v[j][t] = 0;
    }
    return x.serialize();
  }

  std::string bench_instance(std::size_t size, std::uint64_t seed) const override {
    GenParams g;
    g.n = size;
    g.d = std::max<std::size_t>(1, std::bit_width(size));
    g.seed = seed;
    return generate(g);
  }

  std::optional<std::string> mutate(MutationKind kind, std::string_view instance, std::string_view message,
                                    RandomStream& rng) const override {
    if (kind == MutationKind::tamper_coefficients) {
      auto f = text::Fields::parse(message);
      auto c = f.get_uint_list("coefficients");
      std::uint64_t p = f.get_uint("prime");
      if (c.empty()) return std::nullopt;
      // Add a uniformly random nonzero polynomial of the same length.
      bool nonzero = false;
      std::vector<std::uint64_t> delta(c.size());
      while (!nonzero) {
        for (auto& e : delta) {
          e = rng.below(p);
          nonzero |= e != 0;
        }
      }
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + delta[i]) % p;
      f.set("coefficients", text::join(c));
      return f.serialize();
    }
    if (kind == MutationKind::flip_solution_block) {
      Instance x = Instance::parse(instance);
      auto canonical = lex_first_pair(x);
      std::vector<std::pair<std::size_t, std::size_t>> others;
      for (std::size_t i = 0; i < x.n && others.size() < 64; ++i)
        for (std::size_t j = i + 1; j < x.n; ++j)
          if (x.orthogonal(i, j) && std::make_pair(i, j) != canonical) others.emplace_back(i, j);
      if (others.empty()) return std::nullopt;
      auto f = text::Fields::parse(message);
      f.set("pair", pair_text(others[rng.below(others.size())]));
      return f.serialize();
    }
    return std::nullopt;
  }

 private:
  OvProver prover_;
  OvVerifier verifier_;
};

}  // namespace

bool Instance::orthogonal(std::size_t i, std::size_t j) const {
  for (std::size_t t = 0; t < d; ++t)
    if (v[i][t] & v[j][t]) return false;
  return true;
}

bool Instance::is_zero(std::size_t j) const {
  return std::all_of(v[j].begin(), v[j].end(), [](std::uint8_t b) { return b == 0; });
}

Instance Instance::parse(std::string_view text) {
  text::Reader r(text);
  if (r.expect("problem") != "ov") throw ParseError("not an ov instance");
  Instance x;
  x.n = text::parse_uint(r.expect("n"));
  x.d = text::parse_uint(r.expect("d"));
  if (x.n == 0 || x.n > kMaxN) throw ParseError("ov: n out of range");
  if (x.d == 0 || x.d > kMaxD) throw ParseError("ov: d out of range");
  x.v.reserve(x.n);
  for (std::size_t j = 0; j < x.n; ++j) {
    auto row = text::parse_uint_list(r.row());
    if (row.size() != x.d) throw ParseError("ov: vector length differs from d");
    std::vector<std::uint8_t> bits(x.d);
    for (std::size_t t = 0; t < x.d; ++t) {
      if (row[t] > 1) throw ParseError("ov: entries must be 0 or 1");
      bits[t] = static_cast<std::uint8_t>(row[t]);
    }
    x.v.push_back(std::move(bits));
  }
  r.expect_end();
  return x;
}

std::string Instance::serialize() const {
  text::Writer w;
  w.field("problem", "ov").field("n", static_cast<std::int64_t>(n)).field("d", static_cast<std::int64_t>(d));
  for (const auto& row : v) w.row(text::join(row));
  return w.take();
}

FieldParams field_params(std::size_t n, std::size_t d) {
  FieldParams fp;
  auto n128 = static_cast<unsigned __int128>(n);
  auto floor = n128 * n128 * d;
  if (floor >= (static_cast<unsigned __int128>(1) << 62)) throw ConfigError("ov: n^2 d too large");
  fp.p = algebra::next_prime(static_cast<std::uint64_t>(floor));
  auto target = 2 * static_cast<unsigned __int128>(d) * n128 * n128 * n128;
  unsigned __int128 power = 1;
  while (power <= target) {
    power *= fp.p;
    ++fp.l;
  }
  return fp;
}

std::size_t degree_bound(const Instance& x) { return x.d * (x.n - 1); }

FpPolynomial build_polynomial(const Instance& x, const PrimeField& f) {
  auto n128 = static_cast<unsigned __int128>(x.n);
  if (f.modulus() <= n128 * n128 * x.d) throw ConfigError("ov: prime must exceed n^2 d");
  std::vector<FpElem> nodes(x.n), coord(x.n);
  for (std::size_t j = 0; j < x.n; ++j) nodes[j] = f.from_uint(j + 1);
  std::vector<FpPolynomial> psi;
  psi.reserve(x.d);
  for (std::size_t t = 0; t < x.d; ++t) {
    for (std::size_t j = 0; j < x.n; ++j) coord[j] = f.from_uint(x.v[j][t]);
    psi.push_back(algebra::interpolate(f, std::span<const FpElem>(nodes), std::span<const FpElem>(coord)));
  }
  std::size_t D = degree_bound(x);
  std::vector<FpElem> xs(D + 1), ys(D + 1);
  std::vector<FpElem> one_minus(x.d);
  for (std::size_t k = 0; k <= D; ++k) {
    xs[k] = f.from_uint(k);
    for (std::size_t t = 0; t < x.d; ++t) one_minus[t] = f.sub(f.one(), psi[t].evaluate(xs[k]));
    FpElem sum = f.zero();
    for (const auto& u : x.v) {
      FpElem prod = f.one();
      for (std::size_t t = 0; t < x.d; ++t)
        if (u[t]) prod = f.mul(prod, one_minus[t]);
      sum = f.add(sum, prod);
    }
    ys[k] = sum;
  }
  return algebra::interpolate(f, std::span<const FpElem>(xs), std::span<const FpElem>(ys));
}

CountCert prove_counts(const Instance& x, RandomStream& rng) {
  FieldParams fp = field_params(x.n, x.d);
  PrimeField f(fp.p);
  FpPolynomial modulus = algebra::find_irreducible(f, fp.l, rng);
  FpPolynomial q = build_polynomial(x, f);
  CountCert c;
  c.p = fp.p;
  c.l = fp.l;
  for (std::size_t i = 0; i <= fp.l; ++i) c.modulus.push_back(modulus.coeff(i).value);
  std::size_t D = degree_bound(x);
  c.coefficients.assign((D + 1) * fp.l, 0);
  for (std::size_t i = 0; i <= D; ++i) c.coefficients[i * fp.l] = q.coeff(i).value;
  return c;
}

CountCheck certify_counts(const Instance& x, const CountCert& cert, RandomStream& rng) {
  FieldParams fp = field_params(x.n, x.d);
  if (cert.p != fp.p) return {std::nullopt, "wrong-prime"};
  if (cert.l != fp.l) return {std::nullopt, "wrong-extension-degree"};
  PrimeField base(fp.p);
  if (cert.modulus.size() != fp.l + 1) return {std::nullopt, "malformed-modulus"};
  std::vector<FpElem> mod;
  for (auto c : cert.modulus) {
    if (!base.contains(c)) return {std::nullopt, "malformed-modulus"};
    mod.push_back({c});
  }
  FpPolynomial modulus(base, mod);
  if (!modulus.is_monic() || modulus.degree() != static_cast<std::ptrdiff_t>(fp.l))
    return {std::nullopt, "malformed-modulus"};
  if (!algebra::check_irreducible(modulus)) return {std::nullopt, "reducible-modulus"};
  ExtField ext(base, modulus);

  std::size_t D = degree_bound(x);
  if (cert.coefficients.size() != (D + 1) * fp.l) return {std::nullopt, "bad-coefficient-count"};
  for (auto c : cert.coefficients)
    if (!base.contains(c)) return {std::nullopt, "coefficient-out-of-range"};

  // Q(r) by Horner against the direct sum over u.
  ExtElem r = ext.random(rng);
  ExtElem horner = ext.zero();
  std::span<const std::uint64_t> all(cert.coefficients);
  for (std::size_t i = D + 1; i-- > 0;)
    horner = ext.add(ext.mul(horner, r), ext.from_coeffs(all.subspan(i * fp.l, fp.l)));
  auto basis = lagrange_at(ext, node_weights(base, x.n), r);
  std::vector<ExtElem> one_minus(x.d, ext.one());
  for (std::size_t t = 0; t < x.d; ++t) {
    ExtElem psi = ext.zero();
    for (std::size_t j = 0; j < x.n; ++j)
      if (x.v[j][t]) psi = ext.add(psi, basis[j]);
    one_minus[t] = ext.sub(ext.one(), psi);
  }
  ExtElem direct = ext.zero();
  for (const auto& u : x.v) {
    ExtElem prod = ext.one();
    for (std::size_t t = 0; t < x.d; ++t)
      if (u[t]) prod = ext.mul(prod, one_minus[t]);
    direct = ext.add(direct, prod);
  }
  if (!ext.equal(horner, direct)) return {std::nullopt, "coefficient-check-failed"};

  // Nodes lie in F_p, so each residue component of Q evaluates separately.
  std::vector<FpElem> nodes(x.n);
  for (std::size_t j = 0; j < x.n; ++j) nodes[j] = base.from_uint(j + 1);
  std::vector<std::uint64_t> counts(x.n, 0);
  for (std::size_t comp = 0; comp < fp.l; ++comp) {
    std::vector<FpElem> c(D + 1);
    for (std::size_t i = 0; i <= D; ++i) c[i] = {cert.coefficients[i * fp.l + comp]};
    auto vals = algebra::multipoint_eval(FpPolynomial(base, std::move(c)), std::span<const FpElem>(nodes));
    for (std::size_t j = 0; j < x.n; ++j) {
      if (comp == 0) {
        counts[j] = vals[j].value;
      } else if (vals[j].value != 0) {
        return {std::nullopt, "count-not-integral"};
      }
    }
  }
  for (auto c : counts)
    if (c > x.n) return {std::nullopt, "count-out-of-range"};
  return {counts, {}};
}

std::optional<std::pair<std::size_t, std::size_t>> lex_first_pair(const Instance& x) {
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = i + 1; j < x.n; ++j)
      if (x.orthogonal(i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

std::string render(std::size_t i, std::size_t j) {
  return "pair: " + std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
}

const Problem& problem() {
  static const OvProblem instance;
  return instance;
}

}  // namespace psd::ov

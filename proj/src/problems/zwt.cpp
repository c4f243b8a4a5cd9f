#include "psd/problems/zwt.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "psd/algebra/primes.hpp"
#include "psd/core/adversary.hpp"
#include "psd/core/errors.hpp"
#include "psd/core/text_format.hpp"
#include "psd/problems/threesum.hpp"

namespace psd::zwt {
namespace {

constexpr int kRetryCap = 64;
constexpr std::int64_t kWeightBound = std::int64_t{1} << 60;
constexpr std::size_t kMaxN = 4096;

std::uint64_t residue(std::int64_t v, std::uint64_t p) {
  auto r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

// Weight sums fit: three entries below 2^60 each.
std::int64_t tri_weight(const Instance& x, std::size_t a, std::size_t b, std::size_t c) {
  return x.weight(a, b) + x.weight(a, c) + x.weight(b, c);
}

std::vector<std::uint64_t> residues(const Instance& x, std::uint64_t p) {
  std::vector<std::uint64_t> r(x.w.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = residue(x.w[i], p);
  return r;
}

std::optional<std::vector<Triangle>> list_mod_p(const Instance& x, std::uint64_t p, std::size_t limit, std::size_t cap) {
  auto r = residues(x, p);
  const std::size_t n = x.n;
  std::vector<Triangle> out;
  for (std::size_t a = 0; a < std::min(limit, n); ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      std::uint64_t need = (p - r[a * n + b]) % p;
      for (std::size_t c = b + 1; c < n; ++c)
        if ((r[a * n + c] + r[b * n + c]) % p == need) {
          if (tri_weight(x, a, b, c) == 0) throw InternalError("zwt: zero triangle inside the certified range");
          if (out.size() == cap) return std::nullopt;
          out.push_back({a, b, c});
        }
    }
  return out;
}

std::string triangle_text(const Triangle& t) {
  return std::to_string(t.a + 1) + ' ' + std::to_string(t.b + 1) + ' ' + std::to_string(t.c + 1);
}

std::string message_for(std::optional<Triangle> sol, const ModPCert& cert) {
  text::Fields f;
  f.set("triangle", sol ? triangle_text(*sol) : std::string("none"));
  f.set("prime", std::to_string(cert.p));
  f.set("count", std::to_string(cert.count));
  std::string list;
  for (const auto& t : cert.triangles) {
    if (!list.empty()) list += ' ';
    list += triangle_text(t);
  }
  f.set("triangles", list);
  return f.serialize();
}

class ZwtProver final : public Prover {
 public:
  std::string_view problem() const override { return "zwt"; }
  std::string first_message(std::string_view instance, RandomStream& rng) const override {
    Instance x = Instance::parse(instance);
    auto sol = lex_first(x);
    return message_for(sol, prove_nonexistence(x, sol ? sol->a : x.n, rng));
  }
};

class ZwtVerifier final : public Verifier {
 public:
  std::string_view problem() const override { return "zwt"; }
  VerifierDecision decide(std::string_view instance, std::string_view message, RandomStream&) const override {
    Instance x = Instance::parse(instance);
    ProtocolOutcome out = judge(x, message);
    return {out, verifier_record(out)};
  }

 private:
  static ProtocolOutcome judge(const Instance& x, std::string_view message) {
    const std::size_t n = x.n;
    try {
      auto f = text::Fields::parse(message);
      std::optional<Triangle> sol;
      if (f.get("triangle") != "none") {
        auto idx = f.get_uint_list("triangle");
        if (idx.size() != 3) return ProtocolOutcome::bot("malformed-message");
        if (idx[0] < 1 || idx[0] >= idx[1] || idx[1] >= idx[2] || idx[2] > n)
          return ProtocolOutcome::bot("index-out-of-range");
        sol = Triangle{idx[0] - 1, idx[1] - 1, idx[2] - 1};
      }
      ModPCert cert;
      cert.p = f.get_uint("prime");
      cert.count = f.get_uint("count");
      auto flat = f.get_uint_list("triangles");
      if (flat.size() % 3 != 0) return ProtocolOutcome::bot("malformed-message");
      for (std::size_t t = 0; t < flat.size(); t += 3) {
        if (flat[t] < 1 || flat[t + 1] < 1 || flat[t + 2] < 1) return ProtocolOutcome::bot("triangle-out-of-range");
        cert.triangles.push_back({flat[t] - 1, flat[t + 1] - 1, flat[t + 2] - 1});
      }
      if (sol) {
        if (tri_weight(x, sol->a, sol->b, sol->c) != 0) return ProtocolOutcome::bot("not-a-solution");
        // Same least vertex, earlier (b, c).
        for (std::size_t b = sol->a + 1; b <= sol->b; ++b)
          for (std::size_t c = b + 1; c < n && (b < sol->b || c < sol->c); ++c)
            if (tri_weight(x, sol->a, b, c) == 0) return ProtocolOutcome::bot("earlier-solution-not-excluded");
      }
      if (auto fail = check_nonexistence(x, sol ? sol->a : n, cert)) return ProtocolOutcome::bot(*fail);
      if (!sol) return ProtocolOutcome::bot("certified-no-solution");
      return ProtocolOutcome::canonical(render(*sol));
    } catch (const MalformedMessage&) {
      return ProtocolOutcome::bot("malformed-message");
    }
  }
};

class ZwtProblem final : public Problem {
 public:
  std::string_view tag() const override { return "zwt"; }
  bool deterministic() const override { return true; }
  std::string canonicalize(std::string_view instance) const override { return Instance::parse(instance).serialize(); }
  const Prover& prover() const override { return prover_; }
  const Verifier& verifier() const override { return verifier_; }

  std::optional<std::string> oracle(std::string_view instance) const override {
    Instance x = Instance::parse(instance);
    if (x.n > 400) throw ConfigError("zwt oracle limited to n <= 400");
    for (std::size_t a = 0; a < x.n; ++a)
      for (std::size_t b = a + 1; b < x.n; ++b)
        for (std::size_t c = b + 1; c < x.n; ++c)
          if (tri_weight(x, a, b, c) == 0) return render({a, b, c});
    return std::nullopt;
  }

  /// Weights uniform in [-n^2, n^2]; planted closes one random triangle.
  std::string generate(const GenParams& p) const override {
    if (p.n == 0 || p.n > kMaxN) throw ConfigError("zwt: need 1 <= n <= 4096");
    RandomStream rng(p.seed, Role::prover);
    auto range = static_cast<std::int64_t>(std::max<std::size_t>(p.n * p.n, 4));
    Instance x;
    x.n = p.n;
    x.w.assign(p.n * p.n, 0);
    for (std::size_t i = 0; i < p.n; ++i)
      for (std::size_t j = i + 1; j < p.n; ++j) x.set(i, j, rng.uniform(-range, range));
    if (p.planted && p.n >= 3) {
      std::vector<std::size_t> v{rng.below(p.n)};
      while (v.size() < 3) {
        std::size_t u = rng.below(p.n);
        if (std::find(v.begin(), v.end(), u) == v.end()) v.push_back(u);
      }
      std::sort(v.begin(), v.end());
      x.set(v[1], v[2], -(x.weight(v[0], v[1]) + x.weight(v[0], v[2])));
    }
    return x.serialize();
  }

  std::optional<std::string> mutate(MutationKind kind, std::string_view instance, std::string_view message,
                                    RandomStream& rng) const override {
    if (kind != MutationKind::flip_solution_block) return std::nullopt;
    Instance x = Instance::parse(instance);
    if (x.n > 64) return std::nullopt;
    auto canonical = lex_first(x);
    std::vector<Triangle> others;
    for (std::size_t a = 0; a < x.n; ++a)
      for (std::size_t b = a + 1; b < x.n; ++b)
        for (std::size_t c = b + 1; c < x.n; ++c)
          if (tri_weight(x, a, b, c) == 0 && Triangle{a, b, c} != canonical) others.push_back({a, b, c});
    if (others.empty()) return std::nullopt;
    auto f = text::Fields::parse(message);
    f.set("triangle", triangle_text(others[rng.below(others.size())]));
    return f.serialize();
  }

 private:
  ZwtProver prover_;
  ZwtVerifier verifier_;
};

}  // namespace

std::int64_t Instance::max_weight() const {
  std::int64_t m = 0;
  for (auto v : w) m = std::max(m, v < 0 ? -v : v);
  return m;
}

Instance Instance::parse(std::string_view text) {
  text::Reader r(text);
  if (r.expect("problem") != "zwt") throw ParseError("not a zwt instance");
  Instance x;
  x.n = text::parse_uint(r.expect("n"));
  if (x.n == 0 || x.n > kMaxN) throw ParseError("zwt: n out of range");
  x.w.assign(x.n * x.n, 0);
  std::vector<std::uint8_t> seen(x.n * x.n, 0);
  std::size_t pairs = x.n * (x.n - 1) / 2;
  for (std::size_t e = 0; e < pairs; ++e) {
    auto row = text::parse_int_list(r.row());
    if (row.size() != 3) throw ParseError("zwt: edge rows are `i j w`");
    auto n = static_cast<std::int64_t>(x.n);
    if (row[0] < 1 || row[0] > n || row[1] < 1 || row[1] > n || row[0] == row[1])
      throw ParseError("zwt: edge endpoint out of range");
    if (row[2] >= kWeightBound || row[2] <= -kWeightBound) throw ParseError("zwt: weight magnitude must be < 2^60");
    auto i = static_cast<std::size_t>(row[0] - 1), j = static_cast<std::size_t>(row[1] - 1);
    if (seen[i * x.n + j]) throw ParseError("zwt: duplicate edge");
    seen[i * x.n + j] = seen[j * x.n + i] = 1;
    x.set(i, j, row[2]);
  }
  r.expect_end();
  return x;
}

std::string Instance::serialize() const {
  text::Writer wr;
  wr.field("problem", "zwt").field("n", static_cast<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      wr.row(std::to_string(i + 1) + ' ' + std::to_string(j + 1) + ' ' + std::to_string(weight(i, j)));
  return wr.take();
}

std::uint64_t threshold(const Instance& x) {
  auto n = static_cast<unsigned __int128>(x.n);
  unsigned __int128 triangles = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
  auto span = 3 * static_cast<unsigned __int128>(x.max_weight()) + 1;
  std::uint64_t bits = 0;
  while ((static_cast<unsigned __int128>(1) << bits) < span) ++bits;  // ceil(log2(3W+1))
  auto pool = static_cast<unsigned __int128>(threesum::pool_size(x.n));
  return static_cast<std::uint64_t>((2 * triangles * bits + pool - 1) / pool);
}

std::uint64_t count_mod_p(const Instance& x, std::uint64_t p, std::size_t limit) {
  auto r = residues(x, p);
  const std::size_t n = x.n;
  std::uint64_t count = 0;
  // For each pair (a, c), count middle vertices b with r(a,b) + r(b,c) = -r(a,c).
  for (std::size_t a = 0; a < std::min(limit, n); ++a)
    for (std::size_t c = a + 2; c < n; ++c) {
      std::uint64_t need = (p - r[a * n + c]) % p;
      const std::uint64_t* ra = &r[a * n];
      const std::uint64_t* rc = &r[c * n];
      for (std::size_t b = a + 1; b < c; ++b) count += (ra[b] + rc[b]) % p == need;
    }
  return count;
}

ModPCert prove_nonexistence(const Instance& x, std::size_t limit, RandomStream& rng) {
  auto pool = algebra::primes_first(threesum::pool_size(x.n));
  std::uint64_t cap = threshold(x);
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    std::uint64_t p = pool[rng.below(pool.size())];
    if (auto list = list_mod_p(x, p, limit, cap)) {
      ModPCert cert;
      cert.p = p;
      cert.count = list->size();
      cert.triangles = std::move(*list);
      return cert;
    }
  }
  throw RetryExhausted("zwt: 64 consecutive primes exceeded the false-positive threshold");
}

std::optional<std::string> check_nonexistence(const Instance& x, std::size_t limit, const ModPCert& cert) {
  std::uint64_t largest = algebra::primes_first(threesum::pool_size(x.n)).back();
  if (cert.p > largest || !algebra::is_prime(cert.p)) return "prime-not-in-pool";
  if (cert.count != cert.triangles.size() || cert.count > threshold(x)) return "bad-certificate-size";
  for (std::size_t t = 0; t < cert.triangles.size(); ++t) {
    const Triangle& tr = cert.triangles[t];
    if (tr.a >= limit || tr.a >= tr.b || tr.b >= tr.c || tr.c >= x.n) return "triangle-out-of-range";
    if (t > 0 && !(cert.triangles[t - 1] < tr)) return "triangles-not-increasing";
  }
  for (const Triangle& tr : cert.triangles) {
    std::int64_t s = tri_weight(x, tr.a, tr.b, tr.c);
    if (s == 0 || residue(s, cert.p) != 0) return "invalid-false-positive";
  }
  if (count_mod_p(x, cert.p, limit) != cert.count) return "count-mismatch";
  return std::nullopt;
}

std::optional<Triangle> lex_first(const Instance& x) {
  for (std::size_t a = 0; a < x.n; ++a)
    for (std::size_t b = a + 1; b < x.n; ++b)
      for (std::size_t c = b + 1; c < x.n; ++c)
        if (tri_weight(x, a, b, c) == 0) return Triangle{a, b, c};
  return std::nullopt;
}

std::string render(const Triangle& t) { return "triangle: " + triangle_text(t) + "\n"; }

const Problem& problem() {
  static const ZwtProblem instance;
  return instance;
}

}  // namespace psd::zwt

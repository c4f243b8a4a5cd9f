#include "psd/problems/threesum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <tuple>

#include "psd/algebra/convolution.hpp"
#include "psd/algebra/primes.hpp"
#include "psd/core/adversary.hpp"
#include "psd/core/errors.hpp"
#include "psd/core/text_format.hpp"

namespace psd::threesum {
namespace {

constexpr int kRetryCap = 64;

std::uint64_t residue(std::int64_t v, std::uint64_t p) {
  auto r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

// Calls emit(u, v) for every position pair with xs[u] + ys[v] == target over
// two ascending arrays; stops early when emit returns false.
template <class T, class Emit>
void for_each_pair_with_sum(const std::vector<T>& xs, const std::vector<T>& ys, T target, Emit emit) {
  std::size_t lo = 0, hi = ys.size();
  while (lo < xs.size() && hi > 0) {
    T s = xs[lo] + ys[hi - 1];
    if (s < target) {
      ++lo;
    } else if (target < s) {
      --hi;
    } else {
      std::size_t lo_end = lo, hi_begin = hi - 1;
      while (lo_end < xs.size() && xs[lo_end] == xs[lo]) ++lo_end;
      while (hi_begin > 0 && ys[hi_begin - 1] == ys[hi - 1]) --hi_begin;
      for (std::size_t u = lo; u < lo_end; ++u)
        for (std::size_t v = hi_begin; v < hi; ++v)
          if (!emit(u, v)) return;
      lo = lo_end;
      hi = hi_begin;
    }
  }
}

std::vector<std::int64_t> parse_list(std::string_view value, std::size_t n, std::int64_t bound, char name) {
  auto v = text::parse_int_list(value);
  if (v.size() != n) throw ParseError(std::string("threesum: list ") + name + " must have n entries");
  for (auto x : v)
    if (x >= bound || x <= -bound) throw ParseError(std::string("threesum: entry of ") + name + " exceeds magnitude bound");
  return v;
}

std::string triples_text(const std::vector<Triple>& ts) {
  std::string s;
  for (const auto& t : ts) {
    if (!s.empty()) s += ' ';
    s += std::to_string(t.i + 1) + ' ' + std::to_string(t.j + 1) + ' ' + std::to_string(t.k + 1);
  }
  return s;
}

std::vector<Triple> all_zero_triples(const Instance& x, std::size_t limit) {
  std::vector<Triple> out;
  for (std::size_t i = 0; i < x.n(); ++i)
    for (std::size_t j = 0; j < x.n(); ++j)
      for (std::size_t k = 0; k < x.n(); ++k)
        if (x.a[i] + x.b[j] + x.c[k] == 0) {
          out.push_back({i, j, k});
          if (out.size() >= limit) return out;
        }
  return out;
}

class ThreeSumProver final : public Prover {
 public:
  std::string_view problem() const override { return "threesum"; }
  std::string first_message(std::string_view instance, RandomStream& rng) const override {
    Instance x = Instance::parse(instance);
    auto sol = lex_first(x);
    std::size_t prefix = sol ? sol->i : x.n();
    ModPCert cert = prove_nonexistence(x, prefix, rng);
    text::Fields f;
    f.set("indices", sol ? std::to_string(sol->i + 1) + ' ' + std::to_string(sol->j + 1) + ' ' + std::to_string(sol->k + 1)
                         : std::string("none"));
    f.set("prime", std::to_string(cert.p));
    f.set("count", std::to_string(cert.count));
    f.set("triples", triples_text(cert.triples));
    return f.serialize();
  }
};

class ThreeSumVerifier final : public Verifier {
 public:
  std::string_view problem() const override { return "threesum"; }
  VerifierDecision decide(std::string_view instance, std::string_view message, RandomStream&) const override {
    Instance x = Instance::parse(instance);
    ProtocolOutcome out = judge(x, message);
    return {out, verifier_record(out)};
  }

 private:
  static ProtocolOutcome judge(const Instance& x, std::string_view message) {
    const std::size_t n = x.n();
    try {
      auto f = text::Fields::parse(message);
      std::optional<Triple> sol;
      if (f.get("indices") != "none") {
        auto idx = f.get_uint_list("indices");
        if (idx.size() != 3) return ProtocolOutcome::bot("malformed-message");
        for (auto v : idx)
          if (v < 1 || v > n) return ProtocolOutcome::bot("index-out-of-range");
        sol = Triple{idx[0] - 1, idx[1] - 1, idx[2] - 1};
      }
      ModPCert cert;
      cert.p = f.get_uint("prime");
      cert.count = f.get_uint("count");
      auto flat = f.get_uint_list("triples");
      if (flat.size() % 3 != 0) return ProtocolOutcome::bot("malformed-message");
      for (std::size_t t = 0; t < flat.size(); t += 3) {
        if (flat[t] < 1 || flat[t + 1] < 1 || flat[t + 2] < 1) return ProtocolOutcome::bot("index-out-of-range");
        cert.triples.push_back({flat[t] - 1, flat[t + 1] - 1, flat[t + 2] - 1});
      }

      if (sol) {
        const auto [i, j, k] = *sol;
        if (x.a[i] + x.b[j] + x.c[k] != 0) return ProtocolOutcome::bot("not-a-solution");
        // Earlier j': is -(a_i + b_j') present anywhere in c?
        std::vector<std::int64_t> sorted_c = x.c;
        std::sort(sorted_c.begin(), sorted_c.end());
        for (std::size_t jp = 0; jp < j; ++jp)
          if (std::binary_search(sorted_c.begin(), sorted_c.end(), -(x.a[i] + x.b[jp])))
            return ProtocolOutcome::bot("earlier-solution-not-excluded");
        for (std::size_t kp = 0; kp < k; ++kp)
          if (x.a[i] + x.b[j] + x.c[kp] == 0) return ProtocolOutcome::bot("earlier-solution-not-excluded");
      }
      std::size_t prefix = sol ? sol->i : n;
      if (auto fail = check_nonexistence(x, prefix, cert)) return ProtocolOutcome::bot(*fail);
      if (!sol) return ProtocolOutcome::bot("certified-no-solution");
      return ProtocolOutcome::canonical(render(x, *sol));
    } catch (const MalformedMessage&) {
      return ProtocolOutcome::bot("malformed-message");
    }
  }
};

class ThreeSumProblem final : public Problem {
 public:
  std::string_view tag() const override { return "threesum"; }
  bool deterministic() const override { return true; }
  std::string canonicalize(std::string_view instance) const override { return Instance::parse(instance).serialize(); }
  const Prover& prover() const override { return prover_; }
  const Verifier& verifier() const override { return verifier_; }

  std::optional<std::string> oracle(std::string_view instance) const override {
    Instance x = Instance::parse(instance);
    if (x.n() > 400) throw ConfigError("threesum oracle limited to n <= 400");
    auto all = all_zero_triples(x, 1);
    if (all.empty()) return std::nullopt;
    return render(x, all.front());
  }

  std::string generate(const GenParams& p) const override {
    if (p.n == 0 || p.n > 100000) throw ConfigError("threesum: need 1 <= n <= 100000");
    RandomStream rng(p.seed, Role::prover);
    const auto n = static_cast<std::int64_t>(p.n);
    std::int64_t bound = magnitude_bound(p.n);
    std::int64_t range = std::min<std::int64_t>(n <= 1000 ? n * n * n : bound / 4, (bound - 1) / 2);
    if (p.planted) range = std::min<std::int64_t>(range, std::max<std::int64_t>(1, n * n));
    Instance x;
    for (auto* list : {&x.a, &x.b, &x.c})
      for (std::size_t t = 0; t < p.n; ++t) list->push_back(rng.uniform(-range, range));
    if (p.planted) {
      std::size_t i = rng.below(p.n), j = rng.below(p.n), k = rng.below(p.n);
      x.c[k] = -(x.a[i] + x.b[j]);
    }
    return x.serialize();
  }

  std::string bench_instance(std::size_t size, std::uint64_t seed) const override {
    if (size == 0) throw ConfigError("threesum: bench size must be positive");
    // Every entry is 1 mod 4, so every triple sums to 3 mod 4: no solution,
    // and the prover must certify the whole instance.
    RandomStream rng(seed, Role::prover);
    std::int64_t r = std::max<std::int64_t>(1, (magnitude_bound(size) - 2) / 8);
    Instance x;
    for (auto* list : {&x.a, &x.b, &x.c})
      for (std::size_t t = 0; t < size; ++t) list->push_back(4 * rng.uniform(-r, r) + 1);
    return x.serialize();
  }

  std::optional<std::string> mutate(MutationKind kind, std::string_view instance, std::string_view message,
                                    RandomStream& rng) const override {
    if (kind != MutationKind::flip_solution_block) return std::nullopt;
    Instance x = Instance::parse(instance);
    if (x.n() > 64) return std::nullopt;
    auto f = text::Fields::parse(message);
    auto all = all_zero_triples(x, 64);
    std::vector<Triple> others;
    for (const auto& t : all)
      if (f.get("indices") != std::to_string(t.i + 1) + ' ' + std::to_string(t.j + 1) + ' ' + std::to_string(t.k + 1))
        others.push_back(t);
    if (others.empty()) return std::nullopt;
    const Triple& t = others[rng.below(others.size())];
    f.set("indices", std::to_string(t.i + 1) + ' ' + std::to_string(t.j + 1) + ' ' + std::to_string(t.k + 1));
    return f.serialize();
  }

 private:
  ThreeSumProver prover_;
  ThreeSumVerifier verifier_;
};

}  // namespace

Instance Instance::parse(std::string_view text) {
  text::Reader r(text);
  if (r.expect("problem") != "threesum") throw ParseError("not a threesum instance");
  std::uint64_t n = text::parse_uint(r.expect("n"));
  if (n == 0 || n > 1000000) throw ParseError("threesum: n out of range");
  std::int64_t bound = magnitude_bound(n);
  Instance x;
  x.a = parse_list(r.expect("a"), n, bound, 'a');
  x.b = parse_list(r.expect("b"), n, bound, 'b');
  x.c = parse_list(r.expect("c"), n, bound, 'c');
  r.expect_end();
  return x;
}

std::string Instance::serialize() const {
  text::Writer w;
  w.field("problem", "threesum").field("n", static_cast<std::int64_t>(n()));
  w.field("a", text::join(a)).field("b", text::join(b)).field("c", text::join(c));
  return w.take();
}

std::int64_t magnitude_bound(std::size_t n) {
  const std::int64_t cap = std::int64_t{1} << 60;
  auto base = static_cast<std::int64_t>(std::max<std::size_t>(n, 2));
  std::int64_t v = 1;
  for (int e = 0; e < 4; ++e) {
    if (v > cap / base) return cap;
    v *= base;
  }
  return std::min(v, cap);
}

std::size_t pool_size(std::size_t n) {
  // Smallest N with N^2 >= n^3.
  auto cube = static_cast<unsigned __int128>(n) * n * n;
  auto guess = static_cast<std::size_t>(std::sqrt(static_cast<long double>(cube)));
  while (static_cast<unsigned __int128>(guess) * guess < cube) ++guess;
  while (guess > 0 && static_cast<unsigned __int128>(guess - 1) * (guess - 1) >= cube) --guess;
  return std::max<std::size_t>(guess, 1);
}

std::size_t threshold(std::size_t n) {
  std::size_t w = std::bit_width(n);
  return pool_size(n) * w * w;
}

std::uint64_t count_mod_p(const Instance& x, std::size_t prefix, std::uint64_t p) {
  if (prefix == 0) return 0;
  std::vector<std::uint64_t> ha(p, 0), hb(p, 0), hc(p, 0);
  for (std::size_t i = 0; i < prefix; ++i) ++ha[residue(x.a[i], p)];
  for (auto v : x.b) ++hb[residue(v, p)];
  for (auto v : x.c) ++hc[residue(v, p)];
  auto conv = algebra::exact_convolve(ha, hb);
  std::uint64_t total = 0;
  for (std::size_t s = 0; s < conv.size(); ++s) {
    if (!conv[s]) continue;
    total += conv[s] * hc[(p - s % p) % p];
  }
  return total;
}

std::optional<std::vector<Triple>> list_mod_p(const Instance& x, std::size_t prefix, std::uint64_t p, std::size_t cap) {
  const std::size_t n = x.n();
  auto by_residue = [&](const std::vector<std::int64_t>& v, std::vector<std::uint64_t>& keys, std::vector<std::size_t>& order) {
    std::vector<std::pair<std::uint64_t, std::size_t>> tmp(n);
    for (std::size_t t = 0; t < n; ++t) tmp[t] = {residue(v[t], p), t};
    std::sort(tmp.begin(), tmp.end());
    keys.resize(n);
    order.resize(n);
    for (std::size_t t = 0; t < n; ++t) std::tie(keys[t], order[t]) = tmp[t];
  };
  std::vector<std::uint64_t> kb, kc;
  std::vector<std::size_t> ob, oc;
  by_residue(x.b, kb, ob);
  by_residue(x.c, kc, oc);

  std::vector<Triple> out, row;
  for (std::size_t i = 0; i < prefix; ++i) {
    std::uint64_t need = (p - residue(x.a[i], p)) % p;
    row.clear();
    // Residues lie in [0, p), so b + c is either need or need + p.
    for (std::uint64_t target : {need, need + p}) {
      bool overflow = false;
      for_each_pair_with_sum(kb, kc, target, [&](std::size_t bj, std::size_t ck) {
        std::size_t j = ob[bj], k = oc[ck];
        if (x.a[i] + x.b[j] + x.c[k] == 0) throw InternalError("threesum: zero triple inside a certified prefix");
        row.push_back({i, j, k});
        overflow = out.size() + row.size() > cap;
        return !overflow;
      });
      if (overflow) return std::nullopt;
    }
    std::sort(row.begin(), row.end());
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

ModPCert prove_nonexistence(const Instance& x, std::size_t prefix, RandomStream& rng) {
  auto pool = algebra::primes_first(pool_size(x.n()));
  std::size_t cap = threshold(x.n());
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    std::uint64_t p = pool[rng.below(pool.size())];
    if (auto list = list_mod_p(x, prefix, p, cap)) {
      ModPCert cert;
      cert.p = p;
      cert.count = list->size();
      cert.triples = std::move(*list);
      return cert;
    }
  }
  throw RetryExhausted("threesum: 64 consecutive primes exceeded the false-positive threshold");
}

std::optional<std::string> check_nonexistence(const Instance& x, std::size_t prefix, const ModPCert& cert) {
  const std::size_t n = x.n();
  // (1) pool membership
  std::uint64_t largest = algebra::primes_first(pool_size(n)).back();
  if (cert.p > largest || !algebra::is_prime(cert.p)) return "prime-not-in-pool";
  // (2) size and order
  if (cert.count != cert.triples.size() || cert.count > threshold(n)) return "bad-certificate-size";
  for (std::size_t t = 0; t < cert.triples.size(); ++t) {
    const Triple& tr = cert.triples[t];
    if (tr.i >= prefix || tr.j >= n || tr.k >= n) return "triple-out-of-range";
    if (t > 0 && !(cert.triples[t - 1] < tr)) return "triples-not-increasing";
  }
  // (4) each listed triple is a genuine false positive
  for (const Triple& tr : cert.triples) {
    std::int64_t s = x.a[tr.i] + x.b[tr.j] + x.c[tr.k];
    if (s == 0 || residue(s, cert.p) != 0) return "invalid-false-positive";
  }
  // (3) independent count
  if (count_mod_p(x, prefix, cert.p) != cert.count) return "count-mismatch";
  return std::nullopt;
}

std::optional<Triple> lex_first(const Instance& x) {
  const std::size_t n = x.n();
  std::vector<std::int64_t> sb = x.b, sc = x.c;
  std::sort(sb.begin(), sb.end());
  std::sort(sc.begin(), sc.end());
  for (std::size_t i = 0; i < n; ++i) {
    bool any = false;
    for_each_pair_with_sum(sb, sc, -x.a[i], [&](std::size_t, std::size_t) {
      any = true;
      return false;
    });
    if (!any) continue;
    std::vector<std::pair<std::int64_t, std::size_t>> sorted_c(n);
    for (std::size_t k = 0; k < n; ++k) sorted_c[k] = {x.c[k], k};
    std::sort(sorted_c.begin(), sorted_c.end());
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t need = -(x.a[i] + x.b[j]);
      auto it = std::lower_bound(sorted_c.begin(), sorted_c.end(), std::make_pair(need, std::size_t{0}));
      if (it != sorted_c.end() && it->first == need) return Triple{i, j, it->second};
    }
    throw InternalError("threesum: pair scan and index search disagree");
  }
  return std::nullopt;
}

std::string render(const Instance& x, const Triple& t) {
  return "indices: " + std::to_string(t.i + 1) + ' ' + std::to_string(t.j + 1) + ' ' + std::to_string(t.k + 1) +
         "\nvalues: " + std::to_string(x.a[t.i]) + ' ' + std::to_string(x.b[t.j]) + ' ' + std::to_string(x.c[t.k]) +
         "\n";
}

const Problem& problem() {
  static const ThreeSumProblem instance;
  return instance;
}

}  // namespace psd::threesum

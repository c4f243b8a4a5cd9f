#include "psd/problems/hittingset.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "psd/core/adversary.hpp"
#include "psd/core/errors.hpp"
#include "psd/core/text_format.hpp"

namespace psd::hittingset {
namespace {

Set parse_set(std::string_view row) {
  if (row == "-") return {};
  auto v = text::parse_int_list(row);
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) throw ParseError("hittingset: sets must be sorted and duplicate-free");
  if (v.empty()) throw ParseError("hittingset: write the empty set as '-'");
  return v;
}

std::string set_text(const Set& s) { return s.empty() ? std::string("-") : text::join(s); }

bool contains(const Set& s, std::int64_t v) { return std::binary_search(s.begin(), s.end(), v); }

// Disjointness by probing the larger set with each element of the smaller,
// so a large T cited many times costs only the small sides.
bool disjoint(const Set& x, const Set& y) {
  const Set& small = x.size() <= y.size() ? x : y;
  const Set& large = x.size() <= y.size() ? y : x;
  for (auto v : small)
    if (contains(large, v)) return false;
  return true;
}

std::string index_list(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i] + 1);
  }
  return s;
}

std::string message_for(const Instance& x, std::optional<std::size_t> s, const std::vector<std::size_t>& misses) {
  text::Fields f;
  f.set("index", s ? std::to_string(*s + 1) : std::string("none"));
  std::vector<std::int64_t> witnesses;
  if (s) {
    for (const Set& t : x.T) {
      auto it = std::find_if(t.begin(), t.end(), [&](std::int64_t v) { return contains(x.S[*s], v); });
      witnesses.push_back(it == t.end() ? 0 : *it);
    }
  }
  f.set("witnesses", text::join(witnesses));
  f.set("misses", index_list(misses));
  return f.serialize();
}

class HittingSetProver final : public Prover {
 public:
  std::string_view problem() const override { return "hittingset"; }
  std::string first_message(std::string_view instance, RandomStream&) const override {
    Instance x = Instance::parse(instance);
    std::vector<std::size_t> misses;
    std::optional<std::size_t> hit;
    for (std::size_t s = 0; s < x.S.size(); ++s) {
      auto miss = first_miss(x, s);
      if (!miss) {
        hit = s;
        break;
      }
      misses.push_back(*miss);
    }
    return message_for(x, hit, misses);
  }
};

class HittingSetVerifier final : public Verifier {
 public:
  std::string_view problem() const override { return "hittingset"; }
  VerifierDecision decide(std::string_view instance, std::string_view message, RandomStream&) const override {
    Instance x = Instance::parse(instance);
    ProtocolOutcome out = judge(x, message);
    return {out, verifier_record(out)};
  }

 private:
  static ProtocolOutcome judge(const Instance& x, std::string_view message) {
    try {
      auto f = text::Fields::parse(message);
      std::optional<std::size_t> s;
      if (f.get("index") != "none") {
        auto v = f.get_uint("index");
        if (v < 1 || v > x.S.size()) return ProtocolOutcome::bot("index-out-of-range");
        s = v - 1;
      }
      auto misses = f.get_uint_list("misses");
      std::size_t earlier = s ? *s : x.S.size();
      if (misses.size() != earlier) return ProtocolOutcome::bot("wrong-miss-count");
      if (s) {
        auto witnesses = f.get_int_list("witnesses");
        if (witnesses.size() != x.T.size()) return ProtocolOutcome::bot("wrong-witness-count");
        for (std::size_t t = 0; t < x.T.size(); ++t)
          if (!contains(x.S[*s], witnesses[t]) || !contains(x.T[t], witnesses[t]))
            return ProtocolOutcome::bot("witness-not-in-intersection");
      } else if (!f.get("witnesses").empty()) {
        return ProtocolOutcome::bot("wrong-witness-count");
      }
      for (std::size_t sp = 0; sp < earlier; ++sp) {
        auto t = misses[sp];
        if (t < 1 || t > x.T.size()) return ProtocolOutcome::bot("index-out-of-range");
        if (!disjoint(x.S[sp], x.T[t - 1])) return ProtocolOutcome::bot("earlier-set-not-excluded");
      }
      if (!s) return ProtocolOutcome::bot("certified-no-solution");
      return ProtocolOutcome::canonical(render(x, *s));
    } catch (const MalformedMessage&) {
      return ProtocolOutcome::bot("malformed-message");
    }
  }
};

Set random_subset(RandomStream& rng, std::int64_t universe, double density, std::size_t min_size) {
  Set s;
  for (std::int64_t v = 1; v <= universe; ++v)
    if (rng.coin(density)) s.push_back(v);
  while (s.size() < min_size) {
    std::int64_t v = rng.uniform(1, universe);
    if (!contains(s, v)) s.insert(std::lower_bound(s.begin(), s.end(), v), v);
  }
  return s;
}

class HittingSetProblem final : public Problem {
 public:
  std::string_view tag() const override { return "hittingset"; }
  bool deterministic() const override { return true; }
  std::string canonicalize(std::string_view instance) const override { return Instance::parse(instance).serialize(); }
  const Prover& prover() const override { return prover_; }
  const Verifier& verifier() const override { return verifier_; }

  std::optional<std::string> oracle(std::string_view instance) const override {
    Instance x = Instance::parse(instance);
    if (x.size() > 200000) throw ConfigError("hittingset oracle limited to m <= 200000");
    for (std::size_t s = 0; s < x.S.size(); ++s) {
      bool all = true;
      for (const Set& t : x.T) {
        bool hit = false;
        for (auto u : x.S[s])
          for (auto v : t) hit |= u == v;
        if (!hit) {
          all = false;
          break;
        }
      }
      if (all) return render(x, s);
    }
    return std::nullopt;
  }

  /// n sets in S, d sets in T over the universe 1..n+d.
  std::string generate(const GenParams& p) const override {
    if (p.n == 0 || p.n > 5000 || p.d > 5000) throw ConfigError("hittingset: need 1 <= n <= 5000 and d <= 5000");
    RandomStream rng(p.seed, Role::prover);
    auto universe = static_cast<std::int64_t>(p.n + p.d);
    Instance x;
    for (std::size_t t = 0; t < p.d; ++t) x.T.push_back(random_subset(rng, universe, 1.5 / double(universe), 1));
    for (std::size_t s = 0; s < p.n; ++s) x.S.push_back(random_subset(rng, universe, 0.45, 0));
    if (p.planted) {
      Set& s = x.S[rng.below(p.n)];
      for (const Set& t : x.T) {
        std::int64_t v = t[rng.below(t.size())];
        if (!contains(s, v)) s.insert(std::lower_bound(s.begin(), s.end(), v), v);
      }
    }
    return x.serialize();
  }

  /// About sqrt(m/2) sets of about sqrt(m/2) elements on each side; every S
  /// but the last avoids one T, the last meets them all.
  std::string bench_instance(std::size_t size, std::uint64_t seed) const override {
    if (size < 8) throw ConfigError("hittingset: bench size must be at least 8");
    RandomStream rng(seed, Role::prover);
    auto k = static_cast<std::size_t>(std::sqrt(double(size) / 2.0));
    auto block = static_cast<std::int64_t>(4 * k);
    Instance x;
    for (std::size_t t = 0; t < k; ++t) {
      Set s;
      for (std::int64_t v = 0; v < block && s.size() < k; ++v)
        if (rng.coin(0.25)) s.push_back(static_cast<std::int64_t>(t) * block + v);
      if (s.empty()) s.push_back(static_cast<std::int64_t>(t) * block);
      x.T.push_back(std::move(s));
    }
    for (std::size_t s = 0; s + 1 < k; ++s) {
      std::size_t avoid = rng.below(k);
      Set set;
      while (set.size() < k) {
        std::size_t b = rng.below(k);
        if (b == avoid) continue;
        set.push_back(static_cast<std::int64_t>(b) * block + rng.uniform(0, block - 1));
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
      }
      x.S.push_back(std::move(set));
    }
    Set last;
    for (const Set& t : x.T) last.push_back(t[rng.below(t.size())]);
    x.S.push_back(std::move(last));
    return x.serialize();
  }

  std::optional<std::string> mutate(MutationKind kind, std::string_view instance, std::string_view,
                                    RandomStream& rng) const override {
    if (kind != MutationKind::flip_solution_block) return std::nullopt;
    Instance x = Instance::parse(instance);
    auto canonical = first_hitting(x);
    std::vector<std::size_t> others;
    for (std::size_t s = 0; s < x.S.size(); ++s)
      if (s != canonical && !first_miss(x, s)) others.push_back(s);
    if (others.empty()) return std::nullopt;
    std::size_t pick = others[rng.below(others.size())];
    std::vector<std::size_t> misses;
    for (std::size_t s = 0; s < pick; ++s) misses.push_back(first_miss(x, s).value_or(0));
    return message_for(x, pick, misses);
  }

 private:
  HittingSetProver prover_;
  HittingSetVerifier verifier_;
};

}  // namespace

std::size_t Instance::size() const {
  std::size_t m = 0;
  for (const Set& s : S) m += s.size();
  for (const Set& t : T) m += t.size();
  return m;
}

Instance Instance::parse(std::string_view text) {
  text::Reader r(text);
  if (r.expect("problem") != "hittingset") throw ParseError("not a hittingset instance");
  Instance x;
  std::uint64_t ns = text::parse_uint(r.expect("S"));
  if (ns > 10000000) throw ParseError("hittingset: too many sets");
  for (std::uint64_t i = 0; i < ns; ++i) x.S.push_back(parse_set(r.row()));
  std::uint64_t nt = text::parse_uint(r.expect("T"));
  if (nt > 10000000) throw ParseError("hittingset: too many sets");
  for (std::uint64_t i = 0; i < nt; ++i) x.T.push_back(parse_set(r.row()));
  r.expect_end();
  if (x.S.empty()) throw ParseError("hittingset: S must be nonempty");
  return x;
}

std::string Instance::serialize() const {
  text::Writer w;
  w.field("problem", "hittingset").field("S", static_cast<std::int64_t>(S.size()));
  for (const Set& s : S) w.row(set_text(s));
  w.field("T", static_cast<std::int64_t>(T.size()));
  for (const Set& t : T) w.row(set_text(t));
  return w.take();
}

bool intersects(const Set& x, const Set& y) { return !disjoint(x, y); }

std::optional<std::size_t> first_miss(const Instance& x, std::size_t s) {
  std::unordered_set<std::int64_t> members(x.S[s].begin(), x.S[s].end());
  for (std::size_t t = 0; t < x.T.size(); ++t) {
    bool hit = false;
    for (auto v : x.T[t])
      if (members.count(v)) {
        hit = true;
        break;
      }
    if (!hit) return t;
  }
  return std::nullopt;
}

std::optional<std::size_t> first_hitting(const Instance& x) {
  for (std::size_t s = 0; s < x.S.size(); ++s)
    if (!first_miss(x, s)) return s;
  return std::nullopt;
}

std::string render(const Instance& x, std::size_t s) {
  return "index: " + std::to_string(s + 1) + "\nset: " + set_text(x.S[s]) + "\n";
}

const Problem& problem() {
  static const HittingSetProblem instance;
  return instance;
}

}  // namespace psd::hittingset

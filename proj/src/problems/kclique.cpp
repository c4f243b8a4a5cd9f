#include "psd/problems/kclique.hpp"

#include <algorithm>

#include "psd/core/errors.hpp"
#include "psd/core/text_format.hpp"

namespace psd::kclique {
namespace {

constexpr std::size_t kMaxN = 64;

ProtocolPair bind(std::string_view instance) {
  Instance x = Instance::parse(instance);
  return compose_lex_first(search_spec(x), std::string(instance));
}

class KCliqueProver final : public Prover {
 public:
  std::string_view problem() const override { return "kclique"; }
  std::string first_message(std::string_view instance, RandomStream& rng) const override {
    return bind(instance).prover->first_message(instance, rng);
  }
};

class KCliqueVerifier final : public Verifier {
 public:
  std::string_view problem() const override { return "kclique"; }
  VerifierDecision decide(std::string_view instance, std::string_view message, RandomStream& rng) const override {
    return bind(instance).verifier->decide(instance, message, rng);
  }
};

class KCliqueProblem final : public Problem {
 public:
  std::string_view tag() const override { return "kclique"; }
  bool deterministic() const override { return true; }
  std::string canonicalize(std::string_view instance) const override { return Instance::parse(instance).serialize(); }
  const Prover& prover() const override { return prover_; }
  const Verifier& verifier() const override { return verifier_; }

  std::optional<std::string> oracle(std::string_view instance) const override {
    Instance x = Instance::parse(instance);
    std::vector<std::size_t> c(x.k);
    auto rec = [&](auto& self, std::size_t depth, std::size_t from) -> bool {
      if (depth == x.k) return true;
      for (std::size_t v = from; v < x.n; ++v) {
        bool ok = true;
        for (std::size_t t = 0; t < depth && ok; ++t) ok = x.adjacent(c[t], v);
        if (!ok) continue;
        c[depth] = v;
        if (self(self, depth + 1, v + 1)) return true;
      }
      return false;
    };
    if (!rec(rec, 0, 0)) return std::nullopt;
    return render(c);
  }

  /// G(n, 1/2) with k from params; planted adds a random k-clique.
  std::string generate(const GenParams& p) const override {
    if (p.n == 0 || p.n > kMaxN || (p.k != 3 && p.k != 4)) throw ConfigError("kclique: need 1 <= n <= 64, k in {3,4}");
    RandomStream rng(p.seed, Role::prover);
    Instance x;
    x.n = p.n;
    x.k = p.k;
    x.adj.assign(p.n * p.n, 0);
    auto link = [&](std::size_t u, std::size_t v) { x.adj[u * x.n + v] = x.adj[v * x.n + u] = 1; };
    for (std::size_t u = 0; u < p.n; ++u)
      for (std::size_t v = u + 1; v < p.n; ++v)
        if (rng.coin(0.5)) link(u, v);
    if (p.planted && p.n >= p.k) {
      std::vector<std::size_t> pick;
      while (pick.size() < p.k) {
        std::size_t v = rng.below(p.n);
        if (std::find(pick.begin(), pick.end(), v) == pick.end()) pick.push_back(v);
      }
      for (std::size_t a = 0; a < pick.size(); ++a)
        for (std::size_t b = a + 1; b < pick.size(); ++b) link(pick[a], pick[b]);
    }
    return x.serialize();
  }

 private:
  KCliqueProver prover_;
  KCliqueVerifier verifier_;
};

}  // namespace

Instance Instance::parse(std::string_view text) {
  text::Reader r(text);
  if (r.expect("problem") != "kclique") throw ParseError("not a kclique instance");
  Instance x;
  x.n = text::parse_uint(r.expect("n"));
  x.k = text::parse_uint(r.expect("k"));
  if (x.n == 0 || x.n > kMaxN) throw ParseError("kclique: n must be in 1..64");
  if (x.k != 3 && x.k != 4) throw ParseError("kclique: k must be 3 or 4");
  std::uint64_t m = text::parse_uint(r.expect("m"));
  if (m > x.n * (x.n - 1) / 2) throw ParseError("kclique: too many edges");
  x.adj.assign(x.n * x.n, 0);
  for (std::uint64_t e = 0; e < m; ++e) {
    auto row = text::parse_uint_list(r.row());
    if (row.size() != 2 || row[0] < 1 || row[1] < 1 || row[0] > x.n || row[1] > x.n || row[0] == row[1])
      throw ParseError("kclique: edge rows are `u v` with distinct vertices in 1..n");
    std::size_t u = row[0] - 1, v = row[1] - 1;
    if (x.adj[u * x.n + v]) throw ParseError("kclique: duplicate edge");
    x.adj[u * x.n + v] = x.adj[v * x.n + u] = 1;
  }
  r.expect_end();
  return x;
}

std::string Instance::serialize() const {
  text::Writer w;
  std::vector<std::string> rows;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (adjacent(u, v)) rows.push_back(std::to_string(u + 1) + " " + std::to_string(v + 1));
  w.field("problem", "kclique")
      .field("n", static_cast<std::int64_t>(n))
      .field("k", static_cast<std::int64_t>(k))
      .field("m", static_cast<std::int64_t>(rows.size()));
  for (const auto& row : rows) w.row(row);
  return w.take();
}

LexSearchSpec search_spec(const Instance& x) {
  LexSearchSpec spec;
  spec.problem = "kclique";
  spec.block_domain.assign(x.k, x.n);
  spec.existence_check = [x](Blocks y) {
    for (std::size_t a = 0; a < y.size(); ++a)
      for (std::size_t b = a + 1; b < y.size(); ++b)
        if (y[a] >= y[b] || !x.adjacent(y[a], y[b])) return false;
    return true;
  };
  spec.prefix_nonexistence_check = brute_force_prefix_check(spec);
  spec.render = [](Blocks y) { return render(std::vector<std::size_t>(y.begin(), y.end())); };
  return spec;
}

std::string render(const std::vector<std::size_t>& clique) {
  std::string s = "clique:";
  for (auto v : clique) s += " " + std::to_string(v + 1);
  return s + "\n";
}

const Problem& problem() {
  static const KCliqueProblem instance;
  return instance;
}

}  // namespace psd::kclique

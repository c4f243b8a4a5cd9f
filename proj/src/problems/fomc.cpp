#include "psd/problems/fomc.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "psd/core/adversary.hpp"
#include "psd/core/errors.hpp"
#include "psd/core/text_format.hpp"

namespace psd::fomc {
namespace {

constexpr std::size_t kMaxQuantifiers = 4;
constexpr std::size_t kMaxN = 100000;

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::string_view peek() {
    skip();
    if (pos_ >= s_.size()) return {};
    if (!is_ident_start(s_[pos_])) return s_.substr(pos_, 1);
    std::size_t e = pos_;
    while (e < s_.size() && is_ident(s_[e])) ++e;
    return s_.substr(pos_, e - pos_);
  }
  std::string_view next() {
    auto t = peek();
    if (t.empty()) throw ParseError("fomc: formula ended early");
    pos_ += t.size();
    return t;
  }
  void expect(std::string_view t) {
    if (next() != t) throw ParseError("fomc: expected '" + std::string(t) + "' in formula");
  }
  bool done() { return peek().empty(); }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string_view s_;
  std::size_t pos_ = 0;
};

class FormulaParser {
 public:
  FormulaParser(Lexer& lex, Formula& f) : lex_(lex), f_(f) {}

  std::size_t disjunction() {
    std::size_t left = conjunction();
    while (lex_.peek() == "|") {
      lex_.next();
      left = add({Node::Kind::disj, false, 0, 0, left, conjunction()});
    }
    return left;
  }

 private:
  std::size_t conjunction() {
    std::size_t left = unary();
    while (lex_.peek() == "&") {
      lex_.next();
      left = add({Node::Kind::conj, false, 0, 0, left, unary()});
    }
    return left;
  }
  std::size_t unary() {
    auto t = lex_.next();
    if (t == "!") return add({Node::Kind::negate, false, 0, 0, unary(), 0});
    if (t == "(") {
      std::size_t inner = disjunction();
      lex_.expect(")");
      return inner;
    }
    if (t == "true" || t == "false") return add({Node::Kind::constant, t == "true", 0, 0, 0, 0});
    if (t == "edge") {
      std::size_t u = variable(lex_.next());
      std::size_t v = variable(lex_.next());
      return add({Node::Kind::edge, false, u, v, 0, 0});
    }
    std::size_t u = variable(t);
    lex_.expect("=");
    return add({Node::Kind::equal, false, u, variable(lex_.next()), 0, 0});
  }
  std::size_t variable(std::string_view name) {
    auto it = std::find(f_.names.begin(), f_.names.end(), name);
    if (it == f_.names.end()) throw ParseError("fomc: unbound variable '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - f_.names.begin());
  }
  std::size_t add(Node n) {
    f_.nodes.push_back(n);
    return f_.nodes.size() - 1;
  }

  Lexer& lex_;
  Formula& f_;
};

bool eval(const Formula& f, std::size_t node, const Instance& x, const std::vector<std::size_t>& values) {
  const Node& nd = f.nodes[node];
  switch (nd.kind) {
    case Node::Kind::constant: return nd.value;
    case Node::Kind::edge: return x.adjacent(values[nd.u], values[nd.v]);
    case Node::Kind::equal: return values[nd.u] == values[nd.v];
    case Node::Kind::negate: return !eval(f, nd.left, x, values);
    case Node::Kind::conj: return eval(f, nd.left, x, values) && eval(f, nd.right, x, values);
    case Node::Kind::disj: return eval(f, nd.left, x, values) || eval(f, nd.right, x, values);
  }
  return false;
}

// Is there z in X_block with z < bound extending values[0..block) through
// the rest of the leading existential run to a model?
bool extends_below(const Instance& x, std::vector<std::size_t>& values, std::size_t block, std::size_t bound) {
  std::size_t lead = x.formula.leading_exists();
  for (std::size_t z : x.domains[block]) {
    if (z >= bound) break;
    values[block] = z;
    bool found = false;
    if (block + 1 == lead) {
      found = holds(x, values, lead);
    } else {
      found = extends_below(x, values, block + 1, x.n);
    }
    if (found) return true;
  }
  return false;
}

class SlowReference final : public NonexistenceChecker {
 public:
  std::string_view name() const override { return "slow-reference"; }
  std::string certify(const Instance&, const std::vector<std::size_t>&, std::size_t) const override { return {}; }
  bool check(const Instance& x, const std::vector<std::size_t>& y, std::size_t block,
             std::string_view certificate) const override {
    if (!certificate.empty()) return false;
    std::vector<std::size_t> values(x.formula.k(), 0);
    std::copy(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(block), values.begin());
    return !extends_below(x, values, block, block < y.size() ? y[block] : x.n);
  }
};

std::string block_key(std::size_t j) { return "certificate-" + std::to_string(j + 1); }

std::string assignment_text(const std::vector<std::size_t>& y) {
  std::string s;
  for (auto v : y) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v + 1);
  }
  return s;
}

class FomcProver final : public Prover {
 public:
  explicit FomcProver(const NonexistenceChecker& c) : checker_(c) {}
  std::string_view problem() const override { return "fomc"; }
  std::string first_message(std::string_view instance, RandomStream&) const override {
    Instance x = Instance::parse(instance);
    auto y = lex_first(x);
    text::Fields f;
    f.set("assignment", y ? assignment_text(*y) : std::string("none"));
    f.set("checker", std::string(checker_.name()));
    // With no solution only the first block's claim (nothing in X_1 works) is needed.
    std::vector<std::size_t> empty;
    if (y) {
      for (std::size_t j = 0; j < y->size(); ++j) f.set(block_key(j), checker_.certify(x, *y, j));
    } else {
      f.set(block_key(0), checker_.certify(x, empty, 0));
    }
    return f.serialize();
  }

 private:
  const NonexistenceChecker& checker_;
};

class FomcVerifier final : public Verifier {
 public:
  explicit FomcVerifier(const NonexistenceChecker& c) : checker_(c) {}
  std::string_view problem() const override { return "fomc"; }
  VerifierDecision decide(std::string_view instance, std::string_view message, RandomStream&) const override {
    Instance x = Instance::parse(instance);
    ProtocolOutcome out = judge(x, message);
    return {out, verifier_record(out)};
  }

 private:
  ProtocolOutcome judge(const Instance& x, std::string_view message) const {
    try {
      auto f = text::Fields::parse(message);
      if (f.get("checker") != checker_.name()) return ProtocolOutcome::bot("unknown-checker");
      std::size_t lead = x.formula.leading_exists();
      if (f.get("assignment") == "none") {
        std::vector<std::size_t> empty;
        if (!checker_.check(x, empty, 0, f.get(block_key(0)))) return ProtocolOutcome::bot("no-solution-claim-refuted");
        return ProtocolOutcome::bot("certified-no-solution");
      }
      auto raw = f.get_uint_list("assignment");
      if (raw.size() != lead) return ProtocolOutcome::bot("wrong-assignment-length");
      std::vector<std::size_t> y;
      for (std::size_t j = 0; j < lead; ++j) {
        if (raw[j] < 1 || raw[j] > x.n) return ProtocolOutcome::bot("index-out-of-range");
        std::size_t v = raw[j] - 1;
        if (!std::binary_search(x.domains[j].begin(), x.domains[j].end(), v))
          return ProtocolOutcome::bot("value-outside-domain");
        y.push_back(v);
      }
      std::vector<std::size_t> values(x.formula.k(), 0);
      std::copy(y.begin(), y.end(), values.begin());
      if (!holds(x, values, lead)) return ProtocolOutcome::bot("not-a-solution");
      for (std::size_t j = 0; j < lead; ++j)
        if (!checker_.check(x, y, j, f.get(block_key(j)))) return ProtocolOutcome::bot("earlier-solution-not-excluded");
      return ProtocolOutcome::canonical(render(y));
    } catch (const MalformedMessage&) {
      return ProtocolOutcome::bot("malformed-message");
    }
  }

  const NonexistenceChecker& checker_;
};

// Random matrix over the k variables, depth-limited.
std::string random_matrix(RandomStream& rng, const std::vector<std::string>& names, int depth) {
  auto var = [&] { return names[rng.below(names.size())]; };
  if (depth == 0 || rng.coin(0.3)) {
    if (rng.coin(0.8)) return "edge " + var() + " " + var();
    return var() + " = " + var();
  }
  switch (rng.below(3)) {
    case 0: return "!" + random_matrix(rng, names, depth - 1);
    case 1: return "(" + random_matrix(rng, names, depth - 1) + " & " + random_matrix(rng, names, depth - 1) + ")";
    default: return "(" + random_matrix(rng, names, depth - 1) + " | " + random_matrix(rng, names, depth - 1) + ")";
  }
}

class FomcProblem final : public Problem {
 public:
  explicit FomcProblem(const NonexistenceChecker& c) : prover_(c), verifier_(c) {}
  std::string_view tag() const override { return "fomc"; }
  bool deterministic() const override { return true; }
  std::string canonicalize(std::string_view instance) const override { return Instance::parse(instance).serialize(); }
  const Prover& prover() const override { return prover_; }
  const Verifier& verifier() const override { return verifier_; }

  std::optional<std::string> oracle(std::string_view instance) const override {
    Instance x = Instance::parse(instance);
    if (std::pow(double(x.n), double(x.formula.k())) > 1e8) throw ConfigError("fomc oracle limited to n^k <= 1e8");
    std::size_t lead = x.formula.leading_exists();
    std::vector<std::size_t> values(x.formula.k(), 0);
    // Odometer over X_1 x .. x X_lead in lex order.
    std::vector<std::size_t> pos(lead, 0);
    for (std::size_t j = 0; j < lead; ++j)
      if (x.domains[j].empty()) return std::nullopt;
    while (true) {
      for (std::size_t j = 0; j < lead; ++j) values[j] = x.domains[j][pos[j]];
      if (holds(x, values, lead)) return render(std::vector<std::size_t>(values.begin(), values.begin() + lead));
      std::size_t j = lead;
      while (j > 0 && ++pos[j - 1] == x.domains[j - 1].size()) pos[--j] = 0;
      if (j == 0) return std::nullopt;
    }
  }

  /// Random G(n, 0.4) and a random k-quantifier formula of the allowed shape.
  std::string generate(const GenParams& p) const override {
    if (p.n == 0 || p.n > 1000 || p.k == 0 || p.k > kMaxQuantifiers)
      throw ConfigError("fomc: need 1 <= n <= 1000 and 1 <= k <= 4");
    RandomStream rng(p.seed, Role::prover);
    std::string prefix;
    std::vector<std::string> names;
    std::vector<char> q(p.k, 'E');
    do {
      for (std::size_t i = 1; i < p.k; ++i) q[i] = rng.coin(0.5) ? 'E' : 'A';
    } while (p.k >= 2 && q.back() == 'A' && std::count(q.begin(), q.end(), 'A') == 1);
    for (std::size_t i = 0; i < p.k; ++i) {
      names.push_back("x" + std::to_string(i + 1));
      prefix += std::string(1, q[i]) + " " + names.back() + " ";
    }
    std::string formula = prefix + ": " + random_matrix(rng, names, 3);
    std::string edges;
    std::size_t m = 0;
    for (std::size_t u = 1; u <= p.n; ++u)
      for (std::size_t v = u + 1; v <= p.n; ++v)
        if (rng.coin(0.4)) {
          edges += std::to_string(u) + " " + std::to_string(v) + "\n";
          ++m;
        }
    std::string text = "problem: fomc\nn: " + std::to_string(p.n) + "\nformula: " + formula +
                       "\nm: " + std::to_string(m) + "\n" + edges;
    return Instance::parse(text).serialize();
  }

 private:
  FomcProver prover_;
  FomcVerifier verifier_;
};

}  // namespace

std::size_t Formula::leading_exists() const {
  std::size_t i = 0;
  while (i < prefix.size() && prefix[i] == Quantifier::exists) ++i;
  return i;
}

Formula Formula::parse(std::string_view text) {
  Formula f;
  Lexer lex(text);
  while (lex.peek() == "E" || lex.peek() == "A") {
    f.prefix.push_back(lex.next() == "E" ? Quantifier::exists : Quantifier::forall);
    auto name = lex.next();
    if (!is_ident_start(name.front()) || name == "E" || name == "A" || name == "edge" || name == "true" ||
        name == "false")
      throw ParseError("fomc: bad variable name '" + std::string(name) + "'");
    if (std::find(f.names.begin(), f.names.end(), name) != f.names.end())
      throw ParseError("fomc: variable '" + std::string(name) + "' bound twice");
    f.names.emplace_back(name);
  }
  lex.expect(":");
  if (f.prefix.empty()) throw ParseError("fomc: formula needs at least one quantifier");
  if (f.prefix.size() > kMaxQuantifiers) throw ParseError("fomc: at most 4 quantifiers");
  if (f.prefix.front() != Quantifier::exists) throw ParseError("fomc: prefix must start with E");
  if (f.prefix.back() == Quantifier::forall && f.leading_exists() + 1 == f.prefix.size())
    throw ParseError("fomc: prefix of the form E^{k-1} A is excluded");
  FormulaParser parser(lex, f);
  f.root = parser.disjunction();
  if (!lex.done()) throw ParseError("fomc: trailing tokens in formula");
  return f;
}

std::string Formula::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    s += std::string(prefix[i] == Quantifier::exists ? "E " : "A ") + names[i] + " ";
  auto rec = [&](auto& self, std::size_t node) -> std::string {
    const Node& nd = nodes[node];
    switch (nd.kind) {
      case Node::Kind::constant: return nd.value ? "true" : "false";
      case Node::Kind::edge: return "edge " + names[nd.u] + " " + names[nd.v];
      case Node::Kind::equal: return names[nd.u] + " = " + names[nd.v];
      case Node::Kind::negate: return "!" + self(self, nd.left);
      case Node::Kind::conj: return "(" + self(self, nd.left) + " & " + self(self, nd.right) + ")";
      case Node::Kind::disj: return "(" + self(self, nd.left) + " | " + self(self, nd.right) + ")";
    }
    return {};
  };
  return s + ": " + rec(rec, root);
}

bool Instance::adjacent(std::size_t u, std::size_t v) const { return adj[u * n + v] != 0; }

Instance Instance::parse(std::string_view text) {
  text::Reader r(text);
  if (r.expect("problem") != "fomc") throw ParseError("not a fomc instance");
  Instance x;
  x.n = text::parse_uint(r.expect("n"));
  if (x.n == 0 || x.n > kMaxN) throw ParseError("fomc: n out of range");
  x.formula = Formula::parse(r.expect("formula"));
  for (std::size_t i = 0; i < x.formula.k(); ++i) {
    std::vector<std::size_t> dom;
    if (auto line = r.accept("X" + std::to_string(i + 1))) {
      for (auto v : text::parse_uint_list(*line)) {
        if (v < 1 || v > x.n) throw ParseError("fomc: domain vertex out of range");
        if (!dom.empty() && dom.back() >= v - 1) throw ParseError("fomc: domains must be sorted and duplicate-free");
        dom.push_back(v - 1);
      }
    } else {
      for (std::size_t v = 0; v < x.n; ++v) dom.push_back(v);
    }
    x.domains.push_back(std::move(dom));
  }
  std::uint64_t m = text::parse_uint(r.expect("m"));
  if (m > x.n * (x.n - 1) / 2) throw ParseError("fomc: too many edges");
  if (x.n > 20000) throw ParseError("fomc: adjacency matrix limited to n <= 20000");
  x.adj.assign(x.n * x.n, 0);
  for (std::uint64_t e = 0; e < m; ++e) {
    auto row = text::parse_uint_list(r.row());
    if (row.size() != 2 || row[0] < 1 || row[1] < 1 || row[0] > x.n || row[1] > x.n || row[0] == row[1])
      throw ParseError("fomc: edge rows are `u v` with distinct vertices in 1..n");
    std::size_t u = std::min(row[0], row[1]) - 1, v = std::max(row[0], row[1]) - 1;
    if (x.adj[u * x.n + v]) throw ParseError("fomc: duplicate edge");
    x.adj[u * x.n + v] = x.adj[v * x.n + u] = 1;
    x.edges.emplace_back(u, v);
  }
  r.expect_end();
  std::sort(x.edges.begin(), x.edges.end());
  return x;
}

std::string Instance::serialize() const {
  text::Writer w;
  w.field("problem", "fomc").field("n", static_cast<std::int64_t>(n)).field("formula", formula.to_string());
  for (std::size_t i = 0; i < domains.size(); ++i) {
    if (domains[i].size() == n) continue;
    std::string list;
    for (auto v : domains[i]) list += (list.empty() ? "" : " ") + std::to_string(v + 1);
    w.field("X" + std::to_string(i + 1), list);
  }
  w.field("m", static_cast<std::int64_t>(edges.size()));
  for (auto [u, v] : edges) w.row(std::to_string(u + 1) + " " + std::to_string(v + 1));
  return w.take();
}

bool holds(const Instance& x, std::vector<std::size_t>& values, std::size_t depth) {
  const Formula& f = x.formula;
  if (depth == f.k()) return eval(f, f.root, x, values);
  bool exists = f.prefix[depth] == Quantifier::exists;
  for (std::size_t z : x.domains[depth]) {
    values[depth] = z;
    if (holds(x, values, depth + 1) == exists) return exists;
  }
  return !exists;
}

const NonexistenceChecker& slow_reference_checker() {
  static const SlowReference checker;
  return checker;
}

std::optional<std::vector<std::size_t>> lex_first(const Instance& x) {
  std::size_t lead = x.formula.leading_exists();
  std::vector<std::size_t> values(x.formula.k(), 0);
  // Depth-first in lex order over the leading block.
  auto rec = [&](auto& self, std::size_t j) -> bool {
    if (j == lead) return holds(x, values, lead);
    for (std::size_t z : x.domains[j]) {
      values[j] = z;
      if (self(self, j + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return std::vector<std::size_t>(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(lead));
}

std::string render(const std::vector<std::size_t>& y) { return "assignment: " + assignment_text(y) + "\n"; }

std::unique_ptr<Problem> make_problem(const NonexistenceChecker& checker) {
  return std::make_unique<FomcProblem>(checker);
}

const Problem& problem() {
  static const FomcProblem instance(slow_reference_checker());
  return instance;
}

}  // namespace psd::fomc

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psd/core/problem.hpp"

namespace psd::fomc {

enum class Quantifier { exists, forall };

/// Quantifier-free matrix over edge predicates and equalities.
struct Node {
  enum class Kind { constant, edge, equal, negate, conj, disj } kind = Kind::constant;
  bool value = false;        // constant
  std::size_t u = 0, v = 0;  // variable positions for edge / equal
  std::size_t left = 0, right = 0;
};

/// Q_1 x_1 .. Q_k x_k : psi. Throws ParseError on bad syntax, k > 4, a prefix
/// not starting with E, or the form E^{k-1} A.
struct Formula {
  std::vector<Quantifier> prefix;
  std::vector<std::string> names;
  std::vector<Node> nodes;
  std::size_t root = 0;

  std::size_t k() const { return prefix.size(); }
  /// Length of the leading run of existential quantifiers.
  std::size_t leading_exists() const;
  static Formula parse(std::string_view text);
  std::string to_string() const;
};

/// Undirected simple graph on 1..n; vertex-subset domains X_1..X_k.
struct Instance {
  std::size_t n = 0;
  Formula formula;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // 0-based, u < v, sorted
  std::vector<std::vector<std::size_t>> domains;          // 0-based, sorted, one per quantifier

  bool adjacent(std::size_t u, std::size_t v) const;
  /// Optional `X<i>:` lines restrict quantifier i; default is every vertex.
  static Instance parse(std::string_view text);
  std::string serialize() const;

  std::vector<std::uint8_t> adj;  // n*n
};

/// Evaluates Q_{depth+1} .. Q_k psi with x_1..x_depth fixed by `values`.
bool holds(const Instance& x, std::vector<std::size_t>& values, std::size_t depth);

/// Certificate producer and checker for "no z < y_j in X_j extends y_1..y_{j-1}".
class NonexistenceChecker {
 public:
  virtual ~NonexistenceChecker() = default;
  virtual std::string_view name() const = 0;
  virtual std::string certify(const Instance& x, const std::vector<std::size_t>& y, std::size_t block) const = 0;
  virtual bool check(const Instance& x, const std::vector<std::size_t>& y, std::size_t block,
                     std::string_view certificate) const = 0;
};

/// Empty certificates; the check enumerates the restricted domain.
const NonexistenceChecker& slow_reference_checker();

/// Lex-first setting of the leading existential block, 0-based.
std::optional<std::vector<std::size_t>> lex_first(const Instance& x);
std::string render(const std::vector<std::size_t>& y);

/// Protocol using the given checker; problem() uses slow-reference.
std::unique_ptr<Problem> make_problem(const NonexistenceChecker& checker);
const Problem& problem();

}  // namespace psd::fomc

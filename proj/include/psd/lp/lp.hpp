#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "psd/algebra/rational.hpp"

namespace psd::lp {

using algebra::BigInt;
using algebra::BigRational;
using RationalVector = std::vector<BigRational>;

/// max c^T x  s.t.  A x <= b, x >= 0, integer data, m, n >= 1.
struct LpInstance {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<std::vector<BigInt>> A;
  std::vector<BigInt> b;
  std::vector<BigInt> c;

  /// Throws ParseError.
  static LpInstance parse(std::string_view text);
  std::string serialize() const;
};

struct SizeBound {
  std::size_t L = 0;
  BigRational epsilon;  // 2^{-3L-2}

  static SizeBound from_L(std::size_t L);
};

/// L = m + n + ceil(log2 H) + ceil(log2 max|b|) + ceil(log2 max|c|), with H the
/// Hadamard bound (sqrt(k) max|a|)^k maximised over k <= min(m, n).
SizeBound compute_size_bound(const LpInstance& lp);

/// c'_j = c_j + eps^j for j = 1..n.
RationalVector perturb_objective(const LpInstance& lp, const SizeBound& sb);

/// Same shape as LpInstance with rational data; used by the solver.
struct RationalLp {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<RationalVector> A;
  RationalVector b;
  RationalVector c;

  static RationalLp from(const LpInstance& lp);
  static RationalLp from(const LpInstance& lp, RationalVector objective);
};

struct Optimal {
  RationalVector x;
  RationalVector y;
  BigRational value;
};
struct Infeasible {
  RationalVector y;  // y >= 0, A^T y >= 0, b^T y < 0
};
struct Unbounded {
  RationalVector ray;  // d >= 0, A d <= 0, c^T d > 0
};
using SolveResult = std::variant<Optimal, Infeasible, Unbounded>;

/// Two-phase dense rational simplex with Bland's rule.
SolveResult solve_exact(const RationalLp& lp);

/// Solves the perturbed program, scaling the objective by 2^{(3L+2)n} so the
/// simplex sees integer costs; duals are scaled back.
SolveResult solve_perturbed(const LpInstance& lp, const SizeBound& sb);

bool check_optimality(const RationalLp& lp, const RationalVector& x, const RationalVector& y);
bool check_farkas(const RationalLp& lp, const RationalVector& y);
bool check_ray(const RationalLp& lp, const RationalVector& d);

/// Lexicographically greatest optimum by sequential LPs: maximise c^T x, fix
/// the value, maximise x_1, fix, and so on. nullopt if any stage is
/// infeasible or unbounded.
std::optional<RationalVector> sequential_lex_greatest(const LpInstance& lp);

std::string render_solution(const RationalVector& x);

}  // namespace psd::lp

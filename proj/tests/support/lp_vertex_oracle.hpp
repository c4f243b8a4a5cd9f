#pragma once

// Independent LP oracle for bounded programs: enumerate every basic solution
// (n tight constraints out of A x <= b and x >= 0), keep the feasible ones,
// and take the lexicographic maximum of (c^T x, x_1, ..., x_n).

#include <optional>
#include <vector>

#include "psd/lp/lp.hpp"

namespace psd::testing {

inline std::optional<std::vector<lp::BigRational>> solve_square(std::vector<std::vector<lp::BigRational>> M,
                                                                std::vector<lp::BigRational> rhs) {
  std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(M[piv], M[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || M[r][col] == 0) continue;
      lp::BigRational f = M[r][col] / M[col][col];
      for (std::size_t k = col; k < n; ++k) M[r][k] -= f * M[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<lp::BigRational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / M[i][i];
  return x;
}

/// Only meaningful when the feasible region is bounded.
inline std::optional<std::vector<lp::BigRational>> vertex_lex_greatest(const lp::LpInstance& lp) {
  std::size_t m = lp.m, n = lp.n, total = m + n;
  auto row_of = [&](std::size_t idx, std::vector<lp::BigRational>& row, lp::BigRational& rhs) {
    row.assign(n, lp::BigRational(0));
    if (idx < m) {
      for (std::size_t j = 0; j < n; ++j) row[j] = lp.A[idx][j];
      rhs = lp.b[idx];
    } else {
      row[idx - m] = -1;  // -x_j <= 0
      rhs = 0;
    }
  };
  std::optional<std::vector<lp::BigRational>> best;
  lp::BigRational best_val;
  std::vector<std::size_t> pick(n);
  // Enumerate n-subsets of the constraints.
  std::vector<bool> mask(total, false);
  std::fill(mask.end() - static_cast<std::ptrdiff_t>(n), mask.end(), true);
  do {
    std::vector<std::vector<lp::BigRational>> M;
    std::vector<lp::BigRational> rhs;
    for (std::size_t i = 0; i < total; ++i)
      if (mask[i]) {
        std::vector<lp::BigRational> row;
        lp::BigRational r;
        row_of(i, row, r);
        M.push_back(row);
        rhs.push_back(r);
      }
    auto x = solve_square(M, rhs);
    if (!x) continue;
    bool feasible = true;
    for (std::size_t i = 0; i < total && feasible; ++i) {
      std::vector<lp::BigRational> row;
      lp::BigRational r, s = 0;
      row_of(i, row, r);
      for (std::size_t j = 0; j < n; ++j) s += row[j] * (*x)[j];
      feasible = s <= r;
    }
    if (!feasible) continue;
    lp::BigRational val = 0;
    for (std::size_t j = 0; j < n; ++j) val += lp.c[j] * (*x)[j];
    bool better = !best || val > best_val || (val == best_val && *x > *best);
    if (better) {
      best = x;
      best_val = val;
    }
  } while (std::next_permutation(mask.begin(), mask.end()));
  return best;
}

}  // namespace psd::testing

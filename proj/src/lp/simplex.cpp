#include "psd/lp/lp.hpp"

#include "psd/core/errors.hpp"

namespace psd::lp {
namespace {

// Dense tableau: rows 0..m-1 are constraints, row m holds reduced costs
// d_j = c_j - c_B B^{-1} A_j with -objective in the rhs column.
class Tableau {
 public:
  explicit Tableau(const RationalLp& lp) : m_(lp.m), n_(lp.n) {
    for (const auto& v : lp.b)
      if (sgn(v) < 0) ++artificials_;
    cols_ = n_ + m_ + artificials_;
    t_.assign(m_ + 1, RationalVector(cols_ + 1, BigRational(0)));
    basis_.resize(m_);
    std::size_t next_art = n_ + m_;
    for (std::size_t i = 0; i < m_; ++i) {
      int sigma = sgn(lp.b[i]) < 0 ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j) t_[i][j] = sigma * lp.A[i][j];
      t_[i][n_ + i] = sigma;
      t_[i][cols_] = sigma * lp.b[i];
      if (sigma < 0) {
        t_[i][next_art] = 1;
        basis_[i] = next_art++;
      } else {
        basis_[i] = n_ + i;
      }
    }
  }

  SolveResult solve(const RationalVector& c) {
    if (artificials_ > 0) {
      RationalVector cost(cols_, BigRational(0));
      for (std::size_t j = n_ + m_; j < cols_; ++j) cost[j] = -1;
      load_costs(cost);
      run(cols_);
      if (sgn(t_[m_][cols_]) > 0) {
        RationalVector y(m_);
        for (std::size_t i = 0; i < m_; ++i) y[i] = -t_[m_][n_ + i];
        return Infeasible{std::move(y)};
      }
      drive_out_artificials();
    }
    RationalVector cost(cols_, BigRational(0));
    for (std::size_t j = 0; j < n_; ++j) cost[j] = c[j];
    load_costs(cost);
    if (auto entering = run(n_ + m_)) {
      RationalVector ray(n_, BigRational(0));
      if (*entering < n_) ray[*entering] = 1;
      for (std::size_t i = 0; i < m_; ++i)
        if (basis_[i] < n_) ray[basis_[i]] = -t_[i][*entering];
      return Unbounded{std::move(ray)};
    }
    Optimal opt;
    opt.x.assign(n_, BigRational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) opt.x[basis_[i]] = t_[i][cols_];
    opt.y.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) opt.y[i] = -t_[m_][n_ + i];
    opt.value = -t_[m_][cols_];
    return opt;
  }

 private:
  void load_costs(const RationalVector& cost) {
    auto& z = t_[m_];
    for (std::size_t j = 0; j <= cols_; ++j) z[j] = j < cols_ ? cost[j] : BigRational(0);
    for (std::size_t i = 0; i < m_; ++i) {
      const BigRational& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) z[j] -= cb * t_[i][j];
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    BigRational p = t_[r][c];
    for (auto& v : t_[r]) v /= p;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r || sgn(t_[i][c]) == 0) continue;
      BigRational f = t_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (sgn(t_[r][j]) != 0) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  // Bland's rule over columns [0, limit). Returns the entering column when unbounded.
  std::optional<std::size_t> run(std::size_t limit) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j)
        if (sgn(t_[m_][j]) > 0) {
          enter = j;
          break;
        }
      if (enter == limit) return std::nullopt;
      std::size_t leave = m_;
      BigRational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(t_[i][enter]) <= 0) continue;
        BigRational ratio = t_[i][cols_] / t_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return enter;
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_ + m_) continue;
      std::size_t j = 0;
      while (j < n_ + m_ && sgn(t_[i][j]) == 0) ++j;
      // [A | I] has full row rank, so a non-artificial pivot always exists.
      if (j == n_ + m_) throw InternalError("simplex: artificial variable cannot leave the basis");
      pivot(i, j);
    }
  }

  std::size_t m_, n_;
  std::size_t artificials_ = 0;
  std::size_t cols_ = 0;
  std::vector<RationalVector> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

SolveResult solve_exact(const RationalLp& lp) {
  if (lp.A.size() != lp.m || lp.b.size() != lp.m || lp.c.size() != lp.n) throw InternalError("solve_exact: shape mismatch");
  Tableau t(lp);
  return t.solve(lp.c);
}

}  // namespace psd::lp

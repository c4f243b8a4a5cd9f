#include "psd/lp/lp.hpp"

#include <algorithm>

#include "psd/core/errors.hpp"
#include "psd/core/text_format.hpp"

namespace psd::lp {
namespace {

std::vector<BigInt> parse_row(std::string_view value, std::size_t expected, std::string_view what) {
  std::vector<BigInt> out;
  for (auto tok : text::tokens(value)) out.push_back(algebra::parse_bigint(tok));
  if (out.size() != expected)
    throw ParseError(std::string(what) + ": expected " + std::to_string(expected) + " entries, got " +
                     std::to_string(out.size()));
  return out;
}

std::string join_big(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += algebra::to_string(v[i]);
  }
  return s;
}

BigInt max_abs(const std::vector<BigInt>& v) {
  BigInt m = 0;
  for (const auto& x : v) m = std::max<BigInt>(m, abs(x));
  return m;
}

}  // namespace

LpInstance LpInstance::parse(std::string_view text) {
  text::Reader r(text);
  if (r.expect("problem") != "lp") throw ParseError("not an lp instance");
  LpInstance lp;
  lp.m = text::parse_uint(r.expect("m"));
  lp.n = text::parse_uint(r.expect("n"));
  if (lp.m == 0 || lp.n == 0) throw ParseError("lp: m and n must be positive");
  if (lp.m > 10000 || lp.n > 10000) throw ParseError("lp: dimensions too large");
  for (std::size_t i = 0; i < lp.m; ++i) lp.A.push_back(parse_row(r.row(), lp.n, "lp row"));
  lp.b = parse_row(r.expect("b"), lp.m, "b");
  lp.c = parse_row(r.expect("c"), lp.n, "c");
  r.expect_end();
  return lp;
}

std::string LpInstance::serialize() const {
  text::Writer w;
  w.field("problem", "lp").field("m", static_cast<std::int64_t>(m)).field("n", static_cast<std::int64_t>(n));
  for (const auto& row : A) w.row(join_big(row));
  w.field("b", join_big(b)).field("c", join_big(c));
  return w.take();
}

SizeBound SizeBound::from_L(std::size_t L) {
  SizeBound sb;
  sb.L = L;
  sb.epsilon = BigRational(BigInt(1), algebra::pow2(3 * L + 2));
  sb.epsilon.canonicalize();
  return sb;
}

SizeBound compute_size_bound(const LpInstance& lp) {
  BigInt amax = 0;
  for (const auto& row : lp.A) amax = std::max(amax, max_abs(row));
  // ceil(log2 H_k) = ceil(ceil_log2(H_k^2) / 2) with H_k^2 = k^k a^{2k}; exact
  // because H_k^2 is an integer and log2 is monotone.
  std::size_t log_h = 0;
  if (amax > 0) {
    for (std::size_t k = 1; k <= std::min(lp.m, lp.n); ++k) {
      BigInt h2, kk, a2k;
      mpz_ui_pow_ui(kk.get_mpz_t(), k, k);
      mpz_pow_ui(a2k.get_mpz_t(), amax.get_mpz_t(), 2 * k);
      h2 = kk * a2k;
      log_h = std::max(log_h, (algebra::ceil_log2(h2) + 1) / 2);
    }
  }
  std::size_t L = lp.m + lp.n + log_h + algebra::ceil_log2(max_abs(lp.b)) + algebra::ceil_log2(max_abs(lp.c));
  return SizeBound::from_L(L);
}

RationalVector perturb_objective(const LpInstance& lp, const SizeBound& sb) {
  RationalVector c(lp.n);
  BigRational power = 1;
  for (std::size_t j = 0; j < lp.n; ++j) {
    power *= sb.epsilon;
    c[j] = BigRational(lp.c[j]) + power;
  }
  return c;
}

RationalLp RationalLp::from(const LpInstance& lp) {
  RationalVector c;
  for (const auto& v : lp.c) c.emplace_back(v);
  return from(lp, std::move(c));
}

RationalLp RationalLp::from(const LpInstance& lp, RationalVector objective) {
  RationalLp r;
  r.m = lp.m;
  r.n = lp.n;
  for (const auto& row : lp.A) {
    RationalVector q;
    for (const auto& v : row) q.emplace_back(v);
    r.A.push_back(std::move(q));
  }
  for (const auto& v : lp.b) r.b.emplace_back(v);
  r.c = std::move(objective);
  return r;
}

bool check_optimality(const RationalLp& lp, const RationalVector& x, const RationalVector& y) {
  if (x.size() != lp.n || y.size() != lp.m) return false;
  for (const auto& v : x)
    if (sgn(v) < 0) return false;
  for (const auto& v : y)
    if (sgn(v) < 0) return false;
  for (std::size_t i = 0; i < lp.m; ++i) {
    BigRational s = 0;
    for (std::size_t j = 0; j < lp.n; ++j) s += lp.A[i][j] * x[j];
    if (s > lp.b[i]) return false;
  }
  for (std::size_t j = 0; j < lp.n; ++j) {
    BigRational s = 0;
    for (std::size_t i = 0; i < lp.m; ++i) s += lp.A[i][j] * y[i];
    if (s < lp.c[j]) return false;
  }
  BigRational primal = 0, dual = 0;
  for (std::size_t j = 0; j < lp.n; ++j) primal += lp.c[j] * x[j];
  for (std::size_t i = 0; i < lp.m; ++i) dual += lp.b[i] * y[i];
  return primal == dual;
}

bool check_farkas(const RationalLp& lp, const RationalVector& y) {
  if (y.size() != lp.m) return false;
  for (const auto& v : y)
    if (sgn(v) < 0) return false;
  for (std::size_t j = 0; j < lp.n; ++j) {
    BigRational s = 0;
    for (std::size_t i = 0; i < lp.m; ++i) s += lp.A[i][j] * y[i];
    if (sgn(s) < 0) return false;
  }
  BigRational by = 0;
  for (std::size_t i = 0; i < lp.m; ++i) by += lp.b[i] * y[i];
  return sgn(by) < 0;
}

bool check_ray(const RationalLp& lp, const RationalVector& d) {
  if (d.size() != lp.n) return false;
  for (const auto& v : d)
    if (sgn(v) < 0) return false;
  for (std::size_t i = 0; i < lp.m; ++i) {
    BigRational s = 0;
    for (std::size_t j = 0; j < lp.n; ++j) s += lp.A[i][j] * d[j];
    if (sgn(s) > 0) return false;
  }
  BigRational cd = 0;
  for (std::size_t j = 0; j < lp.n; ++j) cd += lp.c[j] * d[j];
  return sgn(cd) > 0;
}

SolveResult solve_perturbed(const LpInstance& lp, const SizeBound& sb) {
  BigInt scale = algebra::pow2((3 * sb.L + 2) * lp.n);
  RationalVector c = perturb_objective(lp, sb);
  for (auto& v : c) {
    v *= scale;
    if (v.get_den() != 1) throw InternalError("scaled perturbed objective is not integral");
  }
  SolveResult res = solve_exact(RationalLp::from(lp, std::move(c)));
  if (auto* opt = std::get_if<Optimal>(&res)) {
    for (auto& v : opt->y) v /= scale;
    opt->value /= scale;
  }
  return res;
}

std::optional<RationalVector> sequential_lex_greatest(const LpInstance& lp) {
  RationalLp stage = RationalLp::from(lp);
  RationalVector objective = stage.c;
  for (std::size_t step = 0; step <= lp.n; ++step) {
    if (step > 0) {
      objective.assign(lp.n, BigRational(0));
      objective[step - 1] = 1;
    }
    stage.c = objective;
    SolveResult res = solve_exact(stage);
    auto* opt = std::get_if<Optimal>(&res);
    if (!opt) return std::nullopt;
    if (step == lp.n) return opt->x;
    // objective^T x >= value, written as -objective^T x <= -value.
    RationalVector row(lp.n);
    for (std::size_t j = 0; j < lp.n; ++j) row[j] = -objective[j];
    stage.A.push_back(std::move(row));
    stage.b.push_back(-opt->value);
    ++stage.m;
  }
  return std::nullopt;
}

std::string render_solution(const RationalVector& x) {
  std::string s = "x:";
  for (const auto& v : x) s += " " + algebra::to_string(v);
  return s + "\n";
}

}  // namespace psd::lp

#include "psd/lp/lp_problem.hpp"

#include "psd/core/errors.hpp"
#include "psd/core/text_format.hpp"
#include "psd/lp/lp.hpp"

namespace psd::lp {
namespace {

std::string join_rationals(const RationalVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += algebra::to_string(v[i]);
  }
  return s;
}

RationalVector parse_rationals(const std::string& value) {
  RationalVector out;
  try {
    for (auto tok : text::tokens(value)) out.push_back(algebra::parse_rational(tok));
  } catch (const ParseError& e) {
    throw MalformedMessage(e.what());
  }
  return out;
}

class LpProver final : public Prover {
 public:
  std::string_view problem() const override { return "lp"; }
  std::string first_message(std::string_view instance, RandomStream&) const override {
    LpInstance lp = LpInstance::parse(instance);
    SizeBound sb = compute_size_bound(lp);
    text::Fields f;
    f.set("size-bound", std::to_string(sb.L));
    SolveResult res = solve_perturbed(lp, sb);
    if (auto* opt = std::get_if<Optimal>(&res)) {
      f.set("status", "optimal");
      f.set("x", join_rationals(opt->x));
      f.set("y", join_rationals(opt->y));
    } else if (auto* inf = std::get_if<Infeasible>(&res)) {
      f.set("status", "infeasible");
      f.set("farkas", join_rationals(inf->y));
    } else {
      f.set("status", "unbounded");
      f.set("ray", join_rationals(std::get<Unbounded>(res).ray));
    }
    return f.serialize();
  }
};

class LpVerifier final : public Verifier {
 public:
  std::string_view problem() const override { return "lp"; }
  VerifierDecision decide(std::string_view instance, std::string_view message, RandomStream&) const override {
    LpInstance lp = LpInstance::parse(instance);
    ProtocolOutcome out = judge(lp, message);
    return {out, verifier_record(out)};
  }

 private:
  static ProtocolOutcome judge(const LpInstance& lp, std::string_view message) {
    try {
      auto f = text::Fields::parse(message);
      SizeBound sb = compute_size_bound(lp);
      if (f.get_uint("size-bound") != sb.L) return ProtocolOutcome::bot("size-bound-mismatch");
      const std::string& status = f.get("status");
      if (status == "optimal") {
        RationalLp perturbed = RationalLp::from(lp, perturb_objective(lp, sb));
        RationalVector x = parse_rationals(f.get("x"));
        RationalVector y = parse_rationals(f.get("y"));
        if (!check_optimality(perturbed, x, y)) return ProtocolOutcome::bot("duality-check-failed");
        return ProtocolOutcome::canonical(render_solution(x));
      }
      if (status == "infeasible") {
        if (!check_farkas(RationalLp::from(lp), parse_rationals(f.get("farkas"))))
          return ProtocolOutcome::bot("invalid-farkas-certificate");
        return ProtocolOutcome::bot("certified-infeasible");
      }
      if (status == "unbounded") {
        RationalLp perturbed = RationalLp::from(lp, perturb_objective(lp, sb));
        if (!check_ray(perturbed, parse_rationals(f.get("ray")))) return ProtocolOutcome::bot("invalid-ray");
        return ProtocolOutcome::bot("certified-unbounded");
      }
      return ProtocolOutcome::bot("unknown-status");
    } catch (const MalformedMessage&) {
      return ProtocolOutcome::bot("malformed-message");
    }
  }
};

std::string random_lp(std::size_t m, std::size_t n, bool bounded, std::uint64_t seed) {
  RandomStream rng(seed, Role::prover);
  LpInstance lp;
  lp.m = m;
  lp.n = n;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<BigInt> row;
    for (std::size_t j = 0; j < n; ++j) row.emplace_back(static_cast<long>(rng.uniform(-5, 5)));
    lp.A.push_back(std::move(row));
    lp.b.emplace_back(static_cast<long>(bounded ? rng.uniform(0, 5) : rng.uniform(-5, 5)));
  }
  for (std::size_t j = 0; j < n; ++j) lp.c.emplace_back(static_cast<long>(rng.uniform(-5, 5)));
  if (bounded) {
    // x = 0 is feasible and the all-ones row caps every coordinate.
    lp.A.back().assign(n, BigInt(1));
    lp.b.back() = 5;
  }
  return lp.serialize();
}

class LpProblem final : public Problem {
 public:
  std::string_view tag() const override { return "lp"; }
  bool deterministic() const override { return true; }
  std::string canonicalize(std::string_view instance) const override { return LpInstance::parse(instance).serialize(); }
  const Prover& prover() const override { return prover_; }
  const Verifier& verifier() const override { return verifier_; }

  std::optional<std::string> oracle(std::string_view instance) const override {
    LpInstance lp = LpInstance::parse(instance);
    if (lp.m + lp.n > 60) throw ConfigError("lp oracle limited to m + n <= 60");
    auto x = sequential_lex_greatest(lp);
    if (!x) return std::nullopt;
    return render_solution(*x);
  }

  std::string generate(const GenParams& p) const override {
    if (p.n == 0 || p.d == 0 || p.n > 200 || p.d > 200) throw ConfigError("lp: need 1 <= n, d <= 200 (n variables, d constraints)");
    return random_lp(p.d, p.n, p.planted, p.seed);
  }

  std::string bench_instance(std::size_t size, std::uint64_t seed) const override {
    if (size == 0) throw ConfigError("lp: bench size must be positive");
    return random_lp(size, size, true, seed);
  }

 private:
  LpProver prover_;
  LpVerifier verifier_;
};

}  // namespace

const Problem& lp_problem() {
  static const LpProblem instance;
  return instance;
}

}  // namespace psd::lp

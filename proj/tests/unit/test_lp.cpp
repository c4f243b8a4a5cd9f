#include <doctest.h>

#include "psd/core/errors.hpp"
#include "psd/core/protocol.hpp"
#include "psd/core/text_format.hpp"
#include "psd/lp/lp.hpp"
#include "psd/lp/lp_problem.hpp"
#include "support/lp_vertex_oracle.hpp"

using namespace psd;
using namespace psd::lp;

namespace {

BigRational q(long num, long den = 1) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigRational pow2_inv(std::size_t e) {
  BigRational r(BigInt(1), algebra::pow2(e));
  r.canonicalize();
  return r;
}

LpInstance make(std::vector<std::vector<long>> A, std::vector<long> b, std::vector<long> c) {
  LpInstance lp;
  lp.m = A.size();
  lp.n = c.size();
  for (auto& row : A) {
    std::vector<BigInt> r;
    for (long v : row) r.emplace_back(v);
    lp.A.push_back(r);
  }
  for (long v : b) lp.b.emplace_back(v);
  for (long v : c) lp.c.emplace_back(v);
  return lp;
}

ProtocolOutcome run(const LpInstance& lp) {
  const Problem& p = lp_problem();
  return run_protocol(lp.serialize(), p.prover(), p.verifier()).outcome;
}

LpInstance random_lp(RandomStream& rng, bool bounded) {
  std::size_t m = 1 + rng.below(5), n = 1 + rng.below(5);
  std::vector<std::vector<long>> A(m, std::vector<long>(n));
  std::vector<long> b(m), c(n);
  for (auto& row : A)
    for (auto& v : row) v = rng.uniform(-5, 5);
  for (auto& v : b) v = rng.uniform(bounded ? 0 : -5, 5);
  for (auto& v : c) v = rng.uniform(-5, 5);
  if (bounded) {
    A.back().assign(n, 1);
    b.back() = 5;
  }
  return make(A, b, c);
}

}  // namespace

TEST_CASE("size bound examples") {
  auto a = compute_size_bound(make({{1}}, {1}, {1}));
  CHECK(a.L == 2);
  CHECK(a.epsilon == pow2_inv(8));
  auto b = compute_size_bound(make({{2}}, {1}, {1}));
  CHECK(b.L == 3);
  CHECK(b.epsilon == pow2_inv(11));
  CHECK(compute_size_bound(make({{1, 0}, {0, 1}}, {1, 1}, {1, 1})).L == 5);
  CHECK(compute_size_bound(make({{0}}, {0}, {0})).L == 2);
  // 3x3 with max entry 3: H_3^2 = 27 * 3^6 = 19683 -> ceil(log2) = 15 -> 8.
  CHECK(compute_size_bound(make({{3, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {1, 1, 1}, {1, 1, 1})).L == 6 + 8);
}

TEST_CASE("perturbation examples") {
  auto lp = make({{1}}, {1}, {1});
  auto c = perturb_objective(lp, SizeBound::from_L(2));
  CHECK(c[0] == q(257, 256));
  SizeBound toy;
  toy.L = 0;
  toy.epsilon = q(1, 4);
  auto c2 = perturb_objective(make({{1, 1}}, {1}, {0, 0}), toy);
  CHECK(c2[0] == q(1, 4));
  CHECK(c2[1] == q(1, 16));
  SizeBound s17;
  s17.epsilon = pow2_inv(17);
  auto c3 = perturb_objective(make({{1, 1}}, {1}, {1, 1}), s17);
  CHECK(c3[0] == 1 + pow2_inv(17));
  CHECK(c3[1] == 1 + pow2_inv(34));
}

TEST_CASE("solve_exact examples") {
  auto r1 = solve_exact(RationalLp::from(make({{1, 1}}, {1}, {1, 1})));
  REQUIRE(std::holds_alternative<Optimal>(r1));
  CHECK(std::get<Optimal>(r1).value == 1);
  CHECK(std::get<Optimal>(r1).y == RationalVector{q(1)});

  auto r2 = solve_exact(RationalLp::from(make({{1}}, {-1}, {0})));
  REQUIRE(std::holds_alternative<Infeasible>(r2));
  CHECK(std::get<Infeasible>(r2).y == RationalVector{q(1)});

  auto r3 = solve_exact(RationalLp::from(make({{0}}, {0}, {1})));
  REQUIRE(std::holds_alternative<Unbounded>(r3));
  CHECK(std::get<Unbounded>(r3).ray == RationalVector{q(1)});
}

TEST_CASE("prover and verifier examples") {
  auto segment = make({{1, 1}}, {1}, {1, 1});
  auto out = run(segment);
  REQUIRE(out.is_canonical());
  CHECK(out.solution() == "x: 1 0\n");
  auto zero_obj = run(make({{1}}, {5}, {0}));
  REQUIRE(zero_obj.is_canonical());
  CHECK(zero_obj.solution() == "x: 5\n");
  auto box = run(make({{1, 0}, {0, 1}}, {3, 2}, {1, 0}));
  REQUIRE(box.is_canonical());
  CHECK(box.solution() == "x: 3 2\n");

  const Problem& p = lp_problem();
  RandomStream rng(1, Role::verifier);
  std::string inst = segment.serialize();
  std::string L = std::to_string(compute_size_bound(segment).L);
  for (std::string y : {"1", "2", "100", "1/2", "3/2"}) {
    auto d = p.verifier().decide(inst, "size-bound: " + L + "\nstatus: optimal\nx: 0 1\ny: " + y + "\n", rng);
    CHECK(d.outcome.is_bot());
  }
  auto neg = p.verifier().decide(inst, "size-bound: " + L + "\nstatus: optimal\nx: 1 0\ny: -1\n", rng);
  CHECK(neg.outcome.is_bot());
  auto junk = p.verifier().decide(inst, "size-bound: " + L + "\nstatus: optimal\nx: 1 zero\ny: 1\n", rng);
  CHECK(junk.outcome.reason() == "malformed-message");
}

TEST_CASE("infeasible and unbounded programs end in certified Bot") {
  auto inf = run(make({{1}}, {-1}, {1}));
  REQUIRE(inf.is_bot());
  CHECK(inf.reason() == "certified-infeasible");
  auto unb = run(make({{1, -1}}, {1}, {1, 0}));
  REQUIRE(unb.is_bot());
  CHECK(unb.reason() == "certified-unbounded");
  // Bounded value but no lex-greatest optimum: x_2 can grow forever at value 0.
  auto flat = run(make({{1, 0}}, {5}, {0, 0}));
  REQUIRE(flat.is_bot());
  CHECK(flat.reason() == "certified-unbounded");
  CHECK_FALSE(lp_problem().oracle(make({{1, 0}}, {5}, {0, 0}).serialize()));
}

TEST_CASE("instance format") {
  auto lp = LpInstance::parse("problem: lp\nm: 2\nn: 2\n1 -2\n3 4\nb: 5 6\nc: -7 8\n");
  CHECK(lp.A[0][1] == -2);
  CHECK(LpInstance::parse(lp.serialize()).serialize() == lp.serialize());
  CHECK_THROWS_AS(LpInstance::parse("problem: lp\nm: 1\nn: 2\n1\nb: 1\nc: 1 1\n"), ParseError);
  CHECK_THROWS_AS(LpInstance::parse("problem: lp\nm: 0\nn: 1\nb:\nc: 1\n"), ParseError);
  CHECK_THROWS_AS(LpInstance::parse("problem: threesum\n"), ParseError);
}

TEST_CASE("perturbed optimum equals the lex-greatest optimum on random LPs") {
  RandomStream rng(4, Role::prover);
  int optimal = 0;
  for (int trial = 0; trial < 200; ++trial) {
    LpInstance lp = random_lp(rng, trial % 2 == 0);
    SizeBound sb = compute_size_bound(lp);
    SolveResult res = solve_perturbed(lp, sb);
    auto seq = sequential_lex_greatest(lp);
    if (auto* opt = std::get_if<Optimal>(&res)) {
      ++optimal;
      REQUIRE(seq);
      CHECK(opt->x == *seq);
      RationalLp perturbed = RationalLp::from(lp, perturb_objective(lp, sb));
      CHECK(check_optimality(perturbed, opt->x, opt->y));
      if (trial % 2 == 0) CHECK(*testing::vertex_lex_greatest(lp) == opt->x);
      // A looser bound gives the same answer.
      auto looser = solve_perturbed(lp, SizeBound::from_L(sb.L + 3));
      REQUIRE(std::holds_alternative<Optimal>(looser));
      CHECK(std::get<Optimal>(looser).x == opt->x);
      // No sampled feasible point beats the dual bound.
      BigRational bound = 0;
      for (std::size_t i = 0; i < lp.m; ++i) bound += BigRational(lp.b[i]) * opt->y[i];
      for (int s = 0; s < 30; ++s) {
        RationalVector x(lp.n);
        for (auto& v : x) v = q(static_cast<long>(rng.below(12)), 2);
        bool feas = true;
        for (std::size_t i = 0; i < lp.m && feas; ++i) {
          BigRational acc = 0;
          for (std::size_t j = 0; j < lp.n; ++j) acc += BigRational(lp.A[i][j]) * x[j];
          feas = acc <= BigRational(lp.b[i]);
        }
        if (!feas) continue;
        BigRational val = 0;
        for (std::size_t j = 0; j < lp.n; ++j) val += perturbed.c[j] * x[j];
        CHECK(val <= bound);
      }
    } else if (auto* inf = std::get_if<Infeasible>(&res)) {
      CHECK_FALSE(seq);
      CHECK(check_farkas(RationalLp::from(lp), inf->y));
    } else {
      CHECK_FALSE(seq);
      CHECK(check_ray(RationalLp::from(lp, perturb_objective(lp, sb)), std::get<Unbounded>(res).ray));
    }
  }
  CHECK(optimal >= 100);
}

TEST_CASE("honest LP runs are pseudo-deterministic and replayable") {
  const Problem& p = lp_problem();
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    GenParams g;
    g.n = 4;
    g.d = 3;
    g.planted = true;
    g.seed = seed;
    std::string inst = p.generate(g);
    CHECK(p.generate(g) == inst);
    auto first = run_protocol(inst, p.prover(), p.verifier(), {1, 1});
    REQUIRE(first.outcome.is_canonical());
    CHECK(first.outcome.solution() == *p.oracle(inst));
    for (std::uint64_t v = 2; v < 6; ++v) {
      auto again = run_protocol(inst, p.prover(), p.verifier(), {v, v * 7});
      CHECK(again.outcome == first.outcome);
      CHECK(replay(inst, again.transcript, p.verifier(), v) == first.outcome);
    }
  }
}

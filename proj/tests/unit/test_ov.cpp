#include <doctest.h>

#include "psd/algebra/primes.hpp"
#include "psd/core/adversary.hpp"
#include "psd/core/errors.hpp"
#include "psd/core/harness.hpp"
#include "psd/core/protocol.hpp"
#include "psd/core/text_format.hpp"
#include "psd/problems/ov.hpp"

using namespace psd;
using namespace psd::ov;

namespace {

Instance make(std::vector<std::vector<std::uint8_t>> v) {
  Instance x;
  x.n = v.size();
  x.d = v.empty() ? 0 : v[0].size();
  x.v = std::move(v);
  return x;
}

std::vector<std::uint64_t> direct_counts(const Instance& x) {
  std::vector<std::uint64_t> c(x.n, 0);
  for (std::size_t j = 0; j < x.n; ++j)
    for (std::size_t u = 0; u < x.n; ++u) {
      int dot = 0;
      for (std::size_t t = 0; t < x.d; ++t) dot += x.v[u][t] * x.v[j][t];
      c[j] += dot == 0;
    }
  return c;
}

std::vector<std::uint64_t> counts_via_polynomial(const Instance& x) {
  algebra::PrimeField f(field_params(x.n, x.d).p);
  auto q = build_polynomial(x, f);
  std::vector<std::uint64_t> out;
  for (std::size_t j = 1; j <= x.n; ++j) out.push_back(q.evaluate(f.from_uint(j)).value);
  return out;
}

std::vector<std::uint64_t> certified(const Instance& x, std::uint64_t seed = 5) {
  RandomStream p(seed, Role::prover), v(seed, Role::verifier);
  auto check = certify_counts(x, prove_counts(x, p), v);
  REQUIRE(check.counts.has_value());
  return *check.counts;
}

ProtocolOutcome run(const Instance& x, std::uint64_t vseed = kDefaultVerifierSeed) {
  return run_protocol(x.serialize(), problem().prover(), problem().verifier(), {kDefaultProverSeed, vseed}).outcome;
}

}  // namespace

TEST_CASE("ov field parameters") {
  for (std::size_t n : {1u, 2u, 3u, 8u, 16u, 100u})
    for (std::size_t d : {1u, 2u, 8u, 30u}) {
      auto fp = field_params(n, d);
      CHECK(algebra::is_prime(fp.p));
      CHECK(fp.p > n * n * d);
      for (std::uint64_t q = n * n * d + 1; q < fp.p; ++q) CHECK_FALSE(algebra::is_prime(q));
      // p^l > 2 d n^3 and p^(l-1) is not.
      unsigned __int128 pow = 1;
      for (std::size_t i = 0; i + 1 < fp.l; ++i) pow *= fp.p;
      unsigned __int128 target = 2 * (unsigned __int128)d * n * n * n;
      CHECK(pow <= target);
      CHECK(pow * fp.p > target);
    }
  CHECK_THROWS_AS(build_polynomial(make({{1, 0}, {0, 1}}), algebra::PrimeField(7)), ConfigError);
}

TEST_CASE("ov polynomial examples") {
  CHECK(counts_via_polynomial(make({{1, 0}, {0, 1}})) == std::vector<std::uint64_t>{1, 1});
  CHECK(counts_via_polynomial(make({{1, 1}})) == std::vector<std::uint64_t>{0});
  CHECK(counts_via_polynomial(make({{0, 0}, {1, 1}})) == std::vector<std::uint64_t>{2, 1});
  CHECK(certified(make({{1, 0}, {0, 1}})) == std::vector<std::uint64_t>{1, 1});
  CHECK(certified(make({{1, 1}})) == std::vector<std::uint64_t>{0});
  CHECK(certified(make({{0, 0, 0}, {1, 0, 1}, {1, 1, 1}}))[0] == 3);
}

TEST_CASE("ov counts equal direct inner products") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GenParams g;
    g.n = 1 + seed % 16;
    g.d = 1 + seed % 8;
    g.seed = seed;
    g.planted = seed % 2;
    Instance x = Instance::parse(problem().generate(g));
    auto expected = direct_counts(x);
    CHECK(counts_via_polynomial(x) == expected);
    CHECK(certified(x, seed) == expected);
    auto q = build_polynomial(x, algebra::PrimeField(field_params(x.n, x.d).p));
    CHECK(q.degree() <= static_cast<std::ptrdiff_t>(degree_bound(x)));
  }
}

TEST_CASE("ov protocol examples") {
  auto out = run(make({{1, 0}, {0, 1}, {1, 1}}));
  REQUIRE(out.is_canonical());
  CHECK(out.solution() == "pair: 1 2\n");
  auto none = run(make({{1, 1}, {1, 0}}));
  CHECK(none.is_bot());
  CHECK(none.reason() == "certified-no-solution");
  Instance x = make({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 1}, {1, 1, 0}});
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto o = run(x, 1000 + s);
    REQUIRE(o.is_canonical());
    CHECK(o.solution() == "pair: 1 4\n");
  }
  auto zero = run(make({{1, 1}, {0, 0}}));
  REQUIRE(zero.is_canonical());
  CHECK(zero.solution() == "pair: 1 2\n");
  CHECK(run(make({{0, 0}})).reason() == "certified-no-solution");
}

TEST_CASE("ov verifier rejects malformed certificates") {
  Instance x = make({{1, 0}, {0, 1}, {1, 1}});
  std::string inst = x.serialize();
  RandomStream p(1, Role::prover);
  std::string honest = problem().prover().first_message(inst, p);
  auto decide = [&](const text::Fields& f) {
    RandomStream v(2, Role::verifier);
    return problem().verifier().decide(inst, f.serialize(), v).outcome;
  };
  auto base = text::Fields::parse(honest);
  CHECK(decide(base).is_canonical());
  {
    auto f = base;
    f.set("prime", std::to_string(algebra::next_prime(f.get_uint("prime") + 1)));
    CHECK(decide(f).reason() == "wrong-prime");
  }
  {
    auto f = base;
    f.set("degree", std::to_string(f.get_uint("degree") + 1));
    CHECK(decide(f).reason() == "wrong-extension-degree");
  }
  {
    // t^l: reducible for l >= 2.
    auto f = base;
    auto l = f.get_uint("degree");
    std::vector<std::uint64_t> m(l + 1, 0);
    m[l] = 1;
    f.set("modulus", text::join(m));
    CHECK(decide(f).reason() == (l >= 2 ? "reducible-modulus" : "coefficient-check-failed"));
  }
  {
    auto f = base;
    auto c = f.get_uint_list("coefficients");
    c.pop_back();
    f.set("coefficients", text::join(c));
    CHECK(decide(f).reason() == "bad-coefficient-count");
  }
  {
    auto f = base;
    f.set("pair", "2 3");
    CHECK(decide(f).reason() == "earlier-vector-has-partner");
    f.set("pair", "1 3");
    CHECK(decide(f).reason() == "pair-not-orthogonal");
    f.set("pair", "2 1");
    CHECK(decide(f).reason() == "index-out-of-range");
    f.set("pair", "none");
    CHECK(decide(f).reason() == "earlier-vector-has-partner");
  }
}

TEST_CASE("ov tampered coefficients are caught at the random point") {
  GenParams g;
  g.n = 8;
  g.d = 6;
  g.planted = true;
  g.seed = 11;
  std::string inst = problem().generate(g);
  auto stats = estimate_soundness(problem(), inst, {MutationKind::tamper_coefficients, 3}, 300, 4);
  // deg Q / p^l is far below 1/n^2 at these sizes.
  CHECK(stats.non_canonical == 0);
  CHECK(stats.bot == 300);
  CHECK(estimate_completeness(problem(), inst, 30, 5).completeness() == 1.0);
}

TEST_CASE("ov honest protocol agrees with the oracle") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GenParams g;
    g.n = 1 + seed % 16;
    g.d = 1 + seed % 8;
    g.planted = seed % 3 == 0;
    g.seed = seed;
    std::string inst = problem().generate(g);
    auto expected = problem().oracle(inst);
    auto out = run_protocol(inst, problem().prover(), problem().verifier()).outcome;
    if (expected) {
      REQUIRE(out.is_canonical());
      CHECK(out.solution() == *expected);
    } else {
      CHECK(out.reason() == "certified-no-solution");
    }
  }
}

TEST_CASE("ov mutations never yield a non-canonical answer") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    GenParams g;
    g.n = 4 + seed;
    g.d = 2 + seed % 5;
    g.planted = seed % 2 == 0;
    g.seed = seed;
    std::string inst = problem().generate(g);
    auto canonical = problem().oracle(inst);
    for (auto kind : all_mutation_kinds()) {
      auto stats = estimate_soundness(problem(), inst, {kind, seed}, 8, seed, canonical);
      CHECK(stats.non_canonical == 0);
    }
  }
}

TEST_CASE("ov instance parsing") {
  CHECK_THROWS_AS(Instance::parse("problem: ov\nn: 1\nd: 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(Instance::parse("problem: ov\nn: 1\nd: 2\n1\n"), ParseError);
  CHECK_THROWS_AS(Instance::parse("problem: ov\nn: 2\nd: 1\n1\n"), ParseError);
  CHECK_THROWS_AS(Instance::parse("problem: ov\nn: 1\nd: 0\n\n"), ParseError);
  Instance x = Instance::parse("problem: ov\nn: 2\nd: 3\n1 0 1\n0 1 0\n");
  CHECK(x.orthogonal(0, 1));
  CHECK(Instance::parse(x.serialize()).serialize() == x.serialize());
}

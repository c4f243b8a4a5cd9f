// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "psd/algebra/primes.hpp"
#include "psd/core/adversary.hpp"
#include "psd/core/bench.hpp"
#include "psd/core/harness.hpp"
#include "psd/core/problem.hpp"
#include "psd/core/protocol.hpp"
#include "psd/core/random.hpp"
#include "psd/core/text_format.hpp"
#include "psd/lp/lp.hpp"
#include "psd/lp/lp_problem.hpp"
#include "psd/problems/fomc.hpp"
#include "psd/problems/hittingset.hpp"
#include "psd/problems/kclique.hpp"
#include "psd/problems/ov.hpp"
#include "psd/problems/registry.hpp"
#include "psd/problems/threesum.hpp"
#include "psd/problems/zwt.hpp"
#include "support/brute.hpp"

using namespace psd;

namespace {

// Pinned tolerances.
constexpr std::size_t kOracleInstances = 200;
constexpr double kOracleBudgetSeconds = 300.0;
constexpr std::size_t kLpInstances = 200;
constexpr std::size_t kMinMutations = 1000;
constexpr std::size_t kOvN = 8;
constexpr std::size_t kOvTamperTrials = 2000;
constexpr double kOvMaxSoundnessError = 1.0 / 32.0;  // 2 / n^2
constexpr std::size_t kOvHonestTrials = 200;
constexpr double kOvMinCompleteness = 0.99;
constexpr std::size_t kCountInstances = 100;
constexpr std::size_t kMarkovInstances = 50;
constexpr std::size_t kMarkovN = 32;
constexpr double kMarkovMinFraction = 0.5;
constexpr double kSlopeGap = 0.3;
constexpr double kHsSlopeLo = 0.7, kHsSlopeHi = 1.3;
constexpr std::size_t kBenchRuns = 5;
constexpr std::size_t kDetInstances = 20;
constexpr std::size_t kDetSeeds = 20;

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("%s %d %s: %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

bool agrees(const ProtocolOutcome& out, const std::optional<std::string>& expected) {
  if (!expected) return out.is_bot();
  return out.is_canonical() && out.solution() == *expected;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// 1 ---------------------------------------------------------------------------

struct OracleCase {
  const char* label;
  const Problem& problem;
  std::function<GenParams(std::size_t)> params;
  std::function<bool(const std::string&)> in_range;
};

void oracle_equivalence() {
  auto any = [](const std::string&) { return true; };
  std::vector<OracleCase> cases = {
      {"threesum", threesum::problem(),
       [](std::size_t i) { return GenParams{1 + i % 32, 4, 3, i % 2 == 0, 1000 + i}; }, any},
      {"hittingset", hittingset::problem(),
       [](std::size_t i) { return GenParams{1 + i % 8, i % 7, 3, i % 2 == 0, 2000 + i}; },
       [](const std::string& s) { return hittingset::Instance::parse(s).size() <= 200; }},
      {"ov", ov::problem(),
       [](std::size_t i) { return GenParams{1 + i % 16, 1 + (i / 16) % 8, 3, i % 2 == 0, 3000 + i}; }, any},
      {"zwt", zwt::problem(), [](std::size_t i) { return GenParams{1 + i % 12, 4, 3, i % 2 == 0, 4000 + i}; },
       any},
      {"fomc", fomc::problem(),
       [](std::size_t i) { return GenParams{1 + i % 8, 4, 1 + (i / 8) % 3, false, 5000 + i}; }, any},
      {"kclique-3", kclique::problem(),
       [](std::size_t i) { return GenParams{1 + i % 10, 4, 3, i % 2 == 0, 6000 + i}; }, any},
      {"kclique-4", kclique::problem(),
       [](std::size_t i) { return GenParams{1 + i % 10, 4, 4, i % 2 == 0, 7000 + i}; }, any},
  };
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    std::size_t agree = 0, solvable = 0, out_of_range = 0;
    for (std::size_t i = 0; i < kOracleInstances; ++i) {
      std::string inst = c.problem.generate(c.params(i));
      if (!c.in_range(inst)) ++out_of_range;
      try {
        auto expected = c.problem.oracle(inst);
        if (expected) ++solvable;
        RunSeeds seeds{RandomStream::derive(kDefaultProverSeed, i), RandomStream::derive(kDefaultVerifierSeed, i)};
        auto res = run_protocol(inst, c.problem.prover(), c.problem.verifier(), seeds);
        if (agrees(res.outcome, expected)) ++agree;
      } catch (const std::exception& e) {
        std::printf("  %s instance %zu: %s\n", c.label, i, e.what());
      }
    }
    ok = ok && agree == kOracleInstances && out_of_range == 0;
    detail += std::string(c.label) + " " + std::to_string(agree) + "/" + std::to_string(kOracleInstances) +
              " (" + std::to_string(solvable) + " solvable)";
    if (out_of_range) detail += " out-of-range=" + std::to_string(out_of_range);
    detail += "; ";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok = ok && secs < kOracleBudgetSeconds;
  report(1, "oracle-equivalence", ok, detail + fmt("%.1f s", secs));
}

// 2 ---------------------------------------------------------------------------

lp::LpInstance random_lp(RandomStream& rng, bool origin_feasible) {
  lp::LpInstance x;
  x.m = static_cast<std::size_t>(rng.uniform(1, 5));
  x.n = static_cast<std::size_t>(rng.uniform(1, 5));
  for (std::size_t i = 0; i < x.m; ++i) {
    std::vector<lp::BigInt> row;
    for (std::size_t j = 0; j < x.n; ++j) row.emplace_back(static_cast<long>(rng.uniform(-5, 5)));
    x.A.push_back(std::move(row));
    x.b.emplace_back(static_cast<long>(rng.uniform(origin_feasible ? 0 : -5, 5)));
  }
  for (std::size_t j = 0; j < x.n; ++j) x.c.emplace_back(static_cast<long>(rng.uniform(-5, 5)));
  return x;
}

lp::RationalVector parse_vector(const std::string& s) {
  lp::RationalVector v;
  for (auto tok : text::tokens(s)) v.push_back(algebra::parse_rational(tok));
  return v;
}

void lp_perturbation() {
  RandomStream rng(0x1b, Role::prover);
  std::size_t match = 0, optimal = 0, accepted = 0, zero_gap = 0;
  const Problem& problem = lp::lp_problem();
  for (std::size_t i = 0; i < kLpInstances; ++i) {
    lp::LpInstance x = random_lp(rng, i % 2 == 0);
    lp::SizeBound sb = lp::compute_size_bound(x);
    lp::SolveResult res = lp::solve_perturbed(x, sb);
    auto seq = lp::sequential_lex_greatest(x);
    const auto* opt = std::get_if<lp::Optimal>(&res);
    if (opt) ++optimal;
    if (opt ? (seq && *seq == opt->x) : !seq) ++match;

    std::string inst = x.serialize();
    RandomStream prng(kDefaultProverSeed, Role::prover), vrng(kDefaultVerifierSeed, Role::verifier);
    std::string msg = problem.prover().first_message(inst, prng);
    auto decision = problem.verifier().decide(inst, msg, vrng);
    if (decision.outcome.is_canonical()) {
      ++accepted;
      auto f = text::Fields::parse(msg);
      auto cx = parse_vector(f.get("x")), y = parse_vector(f.get("y"));
      auto c = lp::perturb_objective(x, sb);
      lp::BigRational primal = 0, dual = 0;
      for (std::size_t j = 0; j < x.n; ++j) primal += c[j] * cx[j];
      for (std::size_t r = 0; r < x.m; ++r) dual += lp::BigRational(x.b[r]) * y[r];
      if (primal == dual && seq && decision.outcome.solution() == lp::render_solution(*seq)) ++zero_gap;
    }
  }
  bool ok = match == kLpInstances && zero_gap == accepted && optimal > 0;
  report(2, "lp-perturbation", ok,
         "lex-greatest match " + std::to_string(match) + "/" + std::to_string(kLpInstances) + " (" +
             std::to_string(optimal) + " optimal); zero duality gap " + std::to_string(zero_gap) + "/" +
             std::to_string(accepted) + " accepted");
}

// 3 ---------------------------------------------------------------------------

void deterministic_soundness() {
  const MutationKind kinds[] = {MutationKind::flip_solution_block, MutationKind::truncate_certificate,
                                MutationKind::swap_certificate_entries, MutationKind::replace_prime,
                                MutationKind::inflate_count, MutationKind::perturb_field};
  struct Target {
    const Problem& problem;
    std::function<GenParams(std::size_t)> params;
  };
  std::vector<Target> targets = {
      {threesum::problem(), [](std::size_t i) { return GenParams{2 + i % 20, 4, 3, i % 2 == 0, 100 + i}; }},
      {hittingset::problem(), [](std::size_t i) { return GenParams{2 + i % 8, 1 + i % 6, 3, i % 2 == 0, 200 + i}; }},
      {zwt::problem(), [](std::size_t i) { return GenParams{3 + i % 10, 4, 3, i % 2 == 0, 300 + i}; }},
      {lp::lp_problem(), [](std::size_t i) { return GenParams{1 + i % 5, 1 + (i / 5) % 5, 3, i % 2 == 0, 400 + i}; }},
      {fomc::problem(), [](std::size_t i) { return GenParams{2 + i % 6, 4, 1 + i % 3, false, 500 + i}; }},
  };
  constexpr std::size_t kPerKind = 6;
  bool ok = true;
  std::string detail;
  for (const auto& t : targets) {
    std::size_t effective = 0, bot = 0, canonical = 0, non_canonical = 0, errors = 0;
    for (std::size_t i = 0; effective < kMinMutations + 200 && i < 2000; ++i) {
      std::string inst = t.problem.generate(t.params(i));
      auto expected = t.problem.oracle(inst);
      RandomStream prng(RandomStream::derive(kDefaultProverSeed, i), Role::prover);
      std::string honest = t.problem.prover().first_message(inst, prng);
      for (MutationKind kind : kinds) {
        for (std::size_t r = 0; r < kPerKind; ++r) {
          std::uint64_t s = RandomStream::derive(i, r * 16 + static_cast<std::uint64_t>(kind));
          try {
            RandomStream mrng(s, Role::prover);
            std::string msg = mutate_message(t.problem, kind, inst, honest, mrng);
            if (msg == honest) continue;
            ++effective;
            RandomStream vrng(s, Role::verifier);
            auto out = t.problem.verifier().decide(inst, msg, vrng).outcome;
            if (out.is_bot()) ++bot;
            else if (agrees(out, expected)) ++canonical;
            else ++non_canonical;
          } catch (const std::exception&) {
            ++errors;
          }
        }
      }
    }
    ok = ok && effective >= kMinMutations && non_canonical == 0 && errors == 0;
    detail += std::string(t.problem.tag()) + " " + std::to_string(effective) + " mutations, " +
              std::to_string(non_canonical) + " non-canonical (" + std::to_string(bot) + " bot, " +
              std::to_string(canonical) + " canonical";
    if (errors) detail += ", " + std::to_string(errors) + " errors";
    detail += "); ";
  }
  report(3, "deterministic-soundness", ok, detail);
}

// 4 ---------------------------------------------------------------------------

void ov_soundness() {
  bool ok = true;
  std::string detail;
  for (bool planted : {true, false}) {
    std::string inst = ov::problem().generate(GenParams{kOvN, 6, 3, planted, planted ? 11u : 12u});
    auto tamper = estimate_soundness(ov::problem(), inst, AdversaryPolicy{MutationKind::tamper_coefficients, 77},
                                     kOvTamperTrials, 0x5eed);
    auto honest = estimate_completeness(ov::problem(), inst, kOvHonestTrials, 0x5eed);
    ok = ok && tamper.trials == kOvTamperTrials && tamper.errors == 0 &&
         tamper.soundness_error() <= kOvMaxSoundnessError && honest.completeness() >= kOvMinCompleteness;
    detail += std::string(planted ? "planted" : "random") + ": non-canonical " +
              std::to_string(tamper.non_canonical) + "/" + std::to_string(tamper.trials) + ", completeness " +
              fmt("%.3f", honest.completeness()) + "; ";
  }
  report(4, "ov-randomized-soundness", ok, detail + fmt("bound %.5f", kOvMaxSoundnessError));
}

// 5 ---------------------------------------------------------------------------

void count_exactness() {
  auto primes = algebra::primes_first(40);
  std::size_t ts = 0, zw = 0;
  for (std::size_t i = 0; i < kCountInstances; ++i) {
    auto x = threesum::Instance::parse(
        threesum::problem().generate(GenParams{1 + i % 24, 4, 3, i % 3 == 0, 9000 + i}));
    std::uint64_t p = primes[(i * 7) % primes.size()];
    if (threesum::count_mod_p(x, x.n(), p) == testing::brute_threesum_count(x, x.n(), p)) ++ts;

    auto w = zwt::Instance::parse(zwt::problem().generate(GenParams{1 + i % 16, 4, 3, i % 3 == 0, 9500 + i}));
    std::uint64_t q = primes[(i * 11) % primes.size()];
    if (zwt::count_mod_p(w, q) == testing::brute_zwt_count(w, q)) ++zw;
  }
  report(5, "count-exactness", ts == kCountInstances && zw == kCountInstances,
         "threesum " + std::to_string(ts) + "/" + std::to_string(kCountInstances) + "; zwt " + std::to_string(zw) +
             "/" + std::to_string(kCountInstances));
}

// 6 ---------------------------------------------------------------------------

void markov_bound() {
  auto pool = algebra::primes_first(threesum::pool_size(kMarkovN));
  const std::uint64_t limit = threesum::threshold(kMarkovN);
  std::size_t found = 0, good = 0;
  double worst = 1.0;
  for (std::uint64_t seed = 1; found < kMarkovInstances && seed < 100000; ++seed) {
    std::string inst = threesum::problem().generate(GenParams{kMarkovN, 4, 3, false, seed});
    if (threesum::problem().oracle(inst)) continue;
    ++found;
    auto x = threesum::Instance::parse(inst);
    std::size_t under = 0;
    for (std::uint64_t p : pool)
      if (threesum::count_mod_p(x, x.n(), p) <= limit) ++under;
    double frac = double(under) / double(pool.size());
    worst = std::min(worst, frac);
    if (frac >= kMarkovMinFraction) ++good;
  }
  report(6, "markov-prime-bound", found == kMarkovInstances && good == found,
         std::to_string(good) + "/" + std::to_string(found) + " instances, pool " + std::to_string(pool.size()) +
             ", threshold " + std::to_string(limit) + fmt(", worst fraction %.3f", worst));
}

// 7 ---------------------------------------------------------------------------

void scaling() {
  const std::size_t ts_ladder[] = {1u << 10, 1u << 11, 1u << 12, 1u << 13};
  const std::size_t hs_ladder[] = {1u << 14, 1u << 15, 1u << 16, 1u << 17, 1u << 18};
  auto ts = run_bench(threesum::problem(), ts_ladder, kBenchRuns, 0xbe7c);
  auto hs = run_bench(hittingset::problem(), hs_ladder, kBenchRuns, 0xbe7c);
  bool ok = ts.verifier_slope <= ts.prover_slope - kSlopeGap && hs.verifier_slope >= kHsSlopeLo &&
            hs.verifier_slope <= kHsSlopeHi;
  report(7, "scaling", ok,
         fmt("threesum prover %.2f", ts.prover_slope) + fmt(" verifier %.2f", ts.verifier_slope) +
             fmt("; hittingset verifier %.2f", hs.verifier_slope));
}

// 8 ---------------------------------------------------------------------------

GenParams determinism_params(std::string_view tag, std::size_t i) {
  std::uint64_t seed = 8000 + i;
  if (tag == "lp") return {1 + i % 5, 1 + (i / 5) % 5, 3, true, seed};
  if (tag == "threesum") return {16, 4, 3, true, seed};
  if (tag == "hittingset") return {8, 6, 3, true, seed};
  if (tag == "ov") return {12, 6, 3, true, seed};
  if (tag == "zwt") return {10, 4, 3, true, seed};
  if (tag == "fomc") return {6, 4, 1 + i % 3, false, seed};
  return {10, 4, 3 + i % 2, true, seed};
}

void pseudo_determinism() {
  bool ok = true;
  std::string detail;
  for (const Problem* problem : problems()) {
    std::size_t stable = 0, canonical = 0;
    for (std::size_t i = 0; i < kDetInstances; ++i) {
      std::string inst = problem->generate(determinism_params(problem->tag(), i));
      std::optional<std::string> first;
      bool same = true, all_canonical = true;
      try {
        for (std::size_t s = 0; s < kDetSeeds; ++s) {
          RunSeeds seeds{kDefaultProverSeed, RandomStream::derive(kDefaultVerifierSeed, s)};
          auto out = run_protocol(inst, problem->prover(), problem->verifier(), seeds).outcome;
          all_canonical = all_canonical && out.is_canonical();
          std::string text = out.serialize();
          if (!first) first = text;
          else same = same && text == *first;
        }
      } catch (const std::exception&) {
        same = false;
      }
      if (same) ++stable;
      if (same && all_canonical) ++canonical;
    }
    ok = ok && stable == kDetInstances && canonical > 0;
    detail += std::string(problem->tag()) + " " + std::to_string(stable) + "/" + std::to_string(kDetInstances) +
              " (" + std::to_string(canonical) + " canonical); ";
  }
  report(8, "pseudo-determinism", ok, detail);
}

}  // namespace

int main() {
  oracle_equivalence();
  lp_perturbation();
  deterministic_soundness();
  ov_soundness();
  count_exactness();
  markov_bound();
  scaling();
  pseudo_determinism();
  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}

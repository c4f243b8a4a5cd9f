#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "psd/core/adversary.hpp"
#include "psd/core/bench.hpp"
#include "psd/core/errors.hpp"
#include "psd/core/harness.hpp"
#include "psd/core/protocol.hpp"
#include "psd/core/text_format.hpp"
#include "psd/problems/registry.hpp"

namespace psd::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw ConfigError("cannot write '" + path + "'");
}

std::string tag_of(const std::string& instance) {
  text::Reader r(instance);
  return r.expect("problem");
}

const Problem& resolve(const std::string& flag, const std::string& instance) {
  std::string tag = tag_of(instance);
  if (!flag.empty() && flag != tag) throw ConfigError("--problem " + flag + " does not match instance header " + tag);
  return problem_by_tag(tag);
}

int report(const ProtocolOutcome& o, std::ostream& out) {
  if (o.is_canonical()) {
    out << "verdict: canonical\n" << o.solution();
    return kExitCanonical;
  }
  out << "verdict: bot\nreason: " << o.reason() << "\n";
  return kExitBot;
}

std::vector<std::size_t> default_ladder(std::string_view tag) {
  static const std::map<std::string_view, std::vector<std::size_t>> ladders{
      {"lp", {4, 6, 8, 10, 12}},
      {"threesum", {1024, 2048, 4096, 8192}},
      {"hittingset", {1 << 14, 1 << 15, 1 << 16, 1 << 17, 1 << 18}},
      {"ov", {16, 32, 64, 128}},
      {"zwt", {16, 32, 64, 128}},
      {"fomc", {4, 6, 8, 10}},
      {"kclique", {8, 16, 24, 32}},
  };
  return ladders.at(tag);
}

struct Options {
  std::string problem, in, out, transcript, policy, ladder;
  std::uint64_t seed = 1;
  std::uint64_t prover_seed = kDefaultProverSeed;
  std::uint64_t verifier_seed = kDefaultVerifierSeed;
  std::size_t trials = 100, runs = 5, n = 8, d = 4, k = 3;
  bool planted = false;
};

int cmd_gen(const Options& o, std::ostream& out) {
  GenParams g;
  g.n = o.n;
  g.d = o.d;
  g.k = o.k;
  g.planted = o.planted;
  g.seed = o.seed;
  write_output(o.out, problem_by_tag(o.problem).generate(g), out);
  return kExitCanonical;
}

int cmd_prove(const Options& o, std::ostream& out) {
  std::string instance = read_file(o.in);
  const Problem& p = resolve(o.problem, instance);
  RunSeeds seeds{o.prover_seed, o.verifier_seed};
  std::optional<MutatingProver> adversary;
  const Prover* prover = &p.prover();
  if (!o.policy.empty() && o.policy != "echo-honest") {
    auto kind = parse_mutation_kind(o.policy);
    if (!kind) throw ConfigError("unknown policy '" + o.policy + "'");
    prover = &adversary.emplace(p, AdversaryPolicy{*kind, o.prover_seed});
  }
  RunResult res = run_protocol(instance, *prover, p.verifier(), seeds);
  if (!o.out.empty()) write_output(o.out, res.transcript.serialize(), out);
  int code = report(res.outcome, out);
  out << std::fixed << std::setprecision(6) << "prover-seconds: " << res.prover_seconds
      << "\nverifier-seconds: " << res.verifier_seconds << "\n";
  return code;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::string instance = read_file(o.in);
  const Problem& p = resolve(o.problem, instance);
  Transcript t = Transcript::parse(read_file(o.transcript));
  return report(replay(instance, t, p.verifier(), o.verifier_seed), out);
}

int cmd_attack(const Options& o, std::ostream& out) {
  std::string instance = read_file(o.in);
  const Problem& p = resolve(o.problem, instance);
  if (o.trials == 0) throw ConfigError("--trials must be at least 1");
  std::vector<MutationKind> kinds;
  if (o.policy.empty() || o.policy == "all") {
    kinds.assign(all_mutation_kinds().begin(), all_mutation_kinds().end());
  } else {
    auto kind = parse_mutation_kind(o.policy);
    if (!kind) throw ConfigError("unknown policy '" + o.policy + "'");
    kinds.push_back(*kind);
  }
  auto canonical = p.oracle(instance);
  out << "policy trials non-canonical-accepts canonical bot errors\n";
  for (MutationKind kind : kinds) {
    auto s = estimate_soundness(p, instance, {kind, o.seed}, o.trials, o.seed, canonical);
    out << to_string(kind) << ' ' << s.trials << ' ' << s.non_canonical << ' ' << s.canonical << ' ' << s.bot << ' '
        << s.errors << "\n";
  }
  return kExitCanonical;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  std::string instance = read_file(o.in);
  const Problem& p = resolve(o.problem, instance);
  auto c = p.oracle(instance);
  if (!c) {
    out << "none\n";
    return kExitBot;
  }
  out << *c;
  return kExitCanonical;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const Problem& p = problem_by_tag(o.problem);
  std::vector<std::size_t> ladder;
  if (o.ladder.empty()) {
    ladder = default_ladder(p.tag());
  } else {
    std::string spaced = o.ladder;
    for (char& c : spaced)
      if (c == ',') c = ' ';
    for (auto v : text::parse_uint_list(spaced)) ladder.push_back(v);
  }
  BenchReport r = run_bench(p, ladder, o.runs, o.seed);
  out << "size prover-median-s verifier-median-s\n" << std::scientific << std::setprecision(4);
  for (const auto& row : r.rows) out << row.size << ' ' << row.prover_median << ' ' << row.verifier_median << "\n";
  out << std::fixed << std::setprecision(3) << "prover-slope: " << r.prover_slope
      << "\nverifier-slope: " << r.verifier_slope << "\n";
  return kExitCanonical;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudo-deterministic proofs: generate, prove, verify, attack, oracle, bench"};
  app.require_subcommand(1);
  Options o;

  auto problem_opt = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--problem", o.problem, "lp|threesum|hittingset|ov|zwt|fomc|kclique");
    if (required) opt->required();
  };

  auto* gen = app.add_subcommand("gen", "write a random instance");
  problem_opt(gen, true);
  gen->add_option("--n", o.n, "primary size (variables, list length, sets, vectors, vertices)");
  gen->add_option("--d", o.d, "secondary size (LP constraints, |T|, OV dimension)");
  gen->add_option("--k", o.k, "quantifiers (fomc) or clique size (kclique)");
  gen->add_flag("--planted", o.planted, "plant a solution");
  gen->add_option("--seed", o.seed, "generator seed");
  gen->add_option("--out", o.out, "output file (default stdout)");

  auto* prove = app.add_subcommand("prove", "run prover and verifier, write the transcript");
  problem_opt(prove, false);
  prove->add_option("--in", o.in, "instance file")->required();
  prove->add_option("--seed", o.prover_seed, "prover seed");
  prove->add_option("--verifier-seed", o.verifier_seed, "verifier seed");
  prove->add_option("--out,--transcript", o.out, "transcript file");
  prove->add_option("--policy", o.policy, "adversary policy instead of the honest prover");

  auto* verify = app.add_subcommand("verify", "replay a transcript against an instance");
  problem_opt(verify, false);
  verify->add_option("--in", o.in, "instance file")->required();
  verify->add_option("--transcript", o.transcript, "transcript file")->required();
  verify->add_option("--verifier-seed", o.verifier_seed, "verifier seed");

  auto* attack = app.add_subcommand("attack", "estimate soundness under mutation policies");
  problem_opt(attack, false);
  attack->add_option("--in", o.in, "instance file")->required();
  attack->add_option("--policy", o.policy, "policy name or all");
  attack->add_option("--trials", o.trials, "trials per policy");
  attack->add_option("--seed", o.seed, "harness seed");

  auto* oracle = app.add_subcommand("oracle", "brute-force canonical solution");
  problem_opt(oracle, false);
  oracle->add_option("--in", o.in, "instance file")->required();

  auto* bench = app.add_subcommand("bench", "time honest runs over a size ladder");
  problem_opt(bench, true);
  bench->add_option("--ladder", o.ladder, "comma-separated sizes");
  bench->add_option("--runs", o.runs, "timed runs per size");
  bench->add_option("--seed", o.seed, "bench seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*prove) return cmd_prove(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*attack) return cmd_attack(o, out);
    if (*oracle) return cmd_oracle(o, out);
    if (*bench) return cmd_bench(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace psd::cli

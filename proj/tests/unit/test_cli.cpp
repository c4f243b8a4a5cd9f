#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "psd/core/errors.hpp"
#include "psd/core/protocol.hpp"
#include "psd/problems/registry.hpp"

using namespace psd;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "psd");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::filesystem::path& p, const std::string& s) { std::ofstream(p) << s; }

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("psd-cli-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("registry") {
  CHECK(problems().size() == 7);
  for (const Problem* p : problems()) CHECK(&problem_by_tag(p->tag()) == p);
  CHECK_THROWS_AS(problem_by_tag("sat"), ConfigError);
}

TEST_CASE("cli gen is deterministic per seed") {
  TempDir dir;
  for (const Problem* p : problems()) {
    std::string tag(p->tag());
    auto a = invoke({"gen", "--problem", tag, "--n", "6", "--seed", "7", "--out", dir / "a.txt"});
    auto b = invoke({"gen", "--problem", tag, "--n", "6", "--seed", "7", "--out", dir / "b.txt"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(slurp(dir / "a.txt") == slurp(dir / "b.txt"));
    CHECK(slurp(dir / "a.txt").rfind("problem: " + tag + "\n", 0) == 0);
  }
  CHECK(invoke({"gen", "--problem", "threesum", "--n", "0"}).code == cli::kExitError);
  CHECK(invoke({"gen", "--problem", "nosuch"}).code == cli::kExitError);
  CHECK(invoke({"gen"}).code == cli::kExitError);
}

TEST_CASE("cli prove, verify and oracle round trip for every problem") {
  TempDir dir;
  for (const Problem* p : problems()) {
    std::string tag(p->tag());
    for (int seed = 1; seed <= 4; ++seed) {
      std::vector<std::string> gen{"gen", "--problem", tag, "--n", "6", "--seed", std::to_string(seed), "--out",
                                   dir / "x.txt"};
      if (seed % 2) gen.push_back("--planted");
      REQUIRE(invoke(gen).code == 0);
      auto proved = invoke({"prove", "--in", dir / "x.txt", "--out", dir / "t.txt"});
      REQUIRE((proved.code == cli::kExitCanonical || proved.code == cli::kExitBot));
      CHECK(proved.out.find("prover-seconds:") != std::string::npos);
      auto verified = invoke({"verify", "--in", dir / "x.txt", "--transcript", dir / "t.txt"});
      CHECK(verified.code == proved.code);
      auto oracle = invoke({"oracle", "--in", dir / "x.txt"});
      CHECK(oracle.code == proved.code);
      if (proved.code == cli::kExitCanonical) CHECK(proved.out.find(oracle.out) != std::string::npos);
    }
  }
}

TEST_CASE("cli exit codes") {
  TempDir dir;
  spit(dir / "yes.txt", "problem: threesum\nn: 2\na: 1 2\nb: 3 4\nc: -4 -5\n");
  spit(dir / "no.txt", "problem: threesum\nn: 1\na: 5\nb: 5\nc: 5\n");
  spit(dir / "bad.txt", "problem: threesum\nn: 2\na: 1\n");
  auto yes = invoke({"prove", "--in", dir / "yes.txt", "--out", dir / "t.txt"});
  CHECK(yes.code == 0);
  CHECK(yes.out.find("indices: 1 1 1") != std::string::npos);
  CHECK(invoke({"prove", "--in", dir / "no.txt"}).code == 2);
  CHECK(invoke({"prove", "--in", dir / "bad.txt"}).code == 3);
  CHECK(invoke({"prove", "--in", dir / "missing.txt"}).code == 3);
  CHECK(invoke({"prove", "--problem", "ov", "--in", dir / "yes.txt"}).code == 3);
  // Transcript replayed against a different instance: digest mismatch.
  CHECK(invoke({"verify", "--in", dir / "no.txt", "--transcript", dir / "t.txt"}).code == 3);
  // One flipped certificate digit.
  std::string t = slurp(dir / "t.txt");
  auto pos = t.find("count: ");
  REQUIRE(pos != std::string::npos);
  t.insert(pos + 7, "1");
  spit(dir / "t2.txt", t);
  CHECK(invoke({"verify", "--in", dir / "yes.txt", "--transcript", dir / "t2.txt"}).code == 2);
}

TEST_CASE("cli attack table") {
  TempDir dir;
  spit(dir / "x.txt", "problem: threesum\nn: 2\na: 1 7\nb: 2 3\nc: -3 -4\n");
  auto r = invoke({"attack", "--in", dir / "x.txt", "--trials", "20"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("policy trials non-canonical-accepts", 0) == 0);
  CHECK(r.out.find("echo-honest 20 0 20 0 0\n") != std::string::npos);
  CHECK(r.out.find("flip-solution-block 20 0 ") != std::string::npos);
  CHECK(invoke({"attack", "--in", dir / "x.txt", "--policy", "bogus"}).code == 3);
  CHECK(invoke({"attack", "--in", dir / "x.txt", "--trials", "0"}).code == 3);
}

TEST_CASE("cli adversarial prove and bench") {
  TempDir dir;
  spit(dir / "x.txt", "problem: threesum\nn: 2\na: 1 7\nb: 2 3\nc: -3 -4\n");
  auto r = invoke({"prove", "--in", dir / "x.txt", "--policy", "inflate-count"});
  CHECK(r.code == 2);
  auto b = invoke({"bench", "--problem", "threesum", "--ladder", "64,128", "--runs", "2"});
  REQUIRE(b.code == 0);
  CHECK(b.out.find("verifier-slope:") != std::string::npos);
  CHECK(invoke({"bench", "--problem", "threesum", "--ladder", "64", "--runs", "2"}).code == 3);
}

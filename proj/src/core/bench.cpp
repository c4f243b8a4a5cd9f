#include "psd/core/bench.hpp"

#include <algorithm>
#include <cmath>

#include "psd/core/errors.hpp"

namespace psd {
namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

}  // namespace

BenchReport run_bench(const Problem& problem, std::span<const std::size_t> ladder, std::size_t runs,
                      std::uint64_t seed) {
  if (runs == 0) throw ConfigError("bench: runs must be positive");
  if (ladder.size() < 2) throw ConfigError("bench: ladder needs at least two sizes");
  BenchReport report;
  std::vector<double> sizes, pt, vt;
  for (std::size_t size : ladder) {
    std::vector<double> prover, verifier;
    for (std::size_t r = 0; r <= runs; ++r) {
      std::uint64_t s = RandomStream::derive(seed ^ size, r);
      std::string instance = problem.bench_instance(size, s);
      RunResult res = run_protocol(instance, problem.prover(), problem.verifier(),
                                   {RandomStream::derive(s, 1), RandomStream::derive(s, 2)});
      if (r == 0) continue;
      prover.push_back(res.prover_seconds);
      verifier.push_back(res.verifier_seconds);
    }
    BenchRow row{size, median(prover), median(verifier)};
    report.rows.push_back(row);
    sizes.push_back(double(size));
    pt.push_back(row.prover_median);
    vt.push_back(row.verifier_median);
  }
  report.prover_slope = loglog_slope(sizes, pt);
  report.verifier_slope = loglog_slope(sizes, vt);
  return report;
}

double loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  const double n = double(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double lx = std::log(xs[i]), ly = std::log(std::max(ys[i], 1e-12));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double den = n * sxx - sx * sx;
  return den == 0 ? 0 : (n * sxy - sx * sy) / den;
}

}  // namespace psd

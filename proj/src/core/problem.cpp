#include "psd/core/problem.hpp"

#include "psd/core/adversary.hpp"

namespace psd {

std::string Problem::bench_instance(std::size_t size, std::uint64_t seed) const {
  GenParams params;
  params.n = size;
  params.seed = seed;
  return generate(params);
}

std::optional<std::string> Problem::mutate(MutationKind, std::string_view, std::string_view, RandomStream&) const {
  return std::nullopt;
}

}  // namespace psd

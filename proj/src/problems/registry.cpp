#include "psd/problems/registry.hpp"

#include <array>
#include <string>

#include "psd/core/errors.hpp"
#include "psd/lp/lp_problem.hpp"
#include "psd/problems/fomc.hpp"
#include "psd/problems/hittingset.hpp"
#include "psd/problems/kclique.hpp"
#include "psd/problems/ov.hpp"
#include "psd/problems/threesum.hpp"
#include "psd/problems/zwt.hpp"

namespace psd {

std::span<const Problem* const> problems() {
  static const std::array<const Problem*, 7> all{&lp::lp_problem(),      &threesum::problem(), &hittingset::problem(),
                                                 &ov::problem(),         &zwt::problem(),      &fomc::problem(),
                                                 &kclique::problem()};
  return all;
}

const Problem& problem_by_tag(std::string_view tag) {
  for (const Problem* p : problems())
    if (p->tag() == tag) return *p;
  throw ConfigError("unknown problem tag '" + std::string(tag) + "'");
}

}  // namespace psd

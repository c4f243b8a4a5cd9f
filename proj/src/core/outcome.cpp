#include "psd/core/outcome.hpp"

#include "psd/core/errors.hpp"

namespace psd {

ProtocolOutcome ProtocolOutcome::canonical(std::string solution) {
  if (solution.empty()) throw InternalError("canonical outcome needs a non-empty solution");
  if (solution.back() != '\n') solution += '\n';
  return ProtocolOutcome(Canonical{std::move(solution)});
}

ProtocolOutcome ProtocolOutcome::bot(std::string reason) { return ProtocolOutcome(Bot{std::move(reason)}); }

const std::string& ProtocolOutcome::solution() const {
  if (!is_canonical()) throw InternalError("solution() on Bot");
  return std::get<Canonical>(value_).solution;
}

const std::string& ProtocolOutcome::reason() const {
  if (is_canonical()) throw InternalError("reason() on Canonical");
  return std::get<Bot>(value_).reason;
}

std::string ProtocolOutcome::serialize() const {
  if (is_canonical()) return "verdict: canonical\n" + solution();
  return "verdict: bot\nreason: " + reason() + "\n";
}

bool operator==(const ProtocolOutcome& a, const ProtocolOutcome& b) {
  if (a.is_canonical() != b.is_canonical()) return false;
  return a.is_canonical() ? a.solution() == b.solution() : a.reason() == b.reason();
}

}  // namespace psd

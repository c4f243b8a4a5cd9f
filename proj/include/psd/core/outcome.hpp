#pragma once

#include <string>
#include <variant>

namespace psd {

/// Verifier verdict: the canonical solution c(x), or Bot. Bot carries a
/// short reason tag ("certified-no-solution", "count-mismatch", ...).
class ProtocolOutcome {
 public:
  struct Canonical {
    std::string solution;
  };
  struct Bot {
    std::string reason;
  };

  static ProtocolOutcome canonical(std::string solution);
  static ProtocolOutcome bot(std::string reason);

  bool is_canonical() const { return std::holds_alternative<Canonical>(value_); }
  bool is_bot() const { return !is_canonical(); }
  const std::string& solution() const;
  const std::string& reason() const;

  /// `verdict: canonical` + solution lines, or `verdict: bot` + `reason:`.
  std::string serialize() const;

  friend bool operator==(const ProtocolOutcome& a, const ProtocolOutcome& b);

 private:
  explicit ProtocolOutcome(std::variant<Canonical, Bot> v) : value_(std::move(v)) {}
  std::variant<Canonical, Bot> value_;
};

}  // namespace psd

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "psd/core/random.hpp"

namespace psd {

/// SHA-256 of the canonical instance serialization, lowercase hex.
std::string instance_digest(std::string_view instance);

struct Message {
  Role role;
  std::string payload;
};

/// Ordered prover/verifier messages. Roles alternate, prover first.
class Transcript {
 public:
  Transcript() = default;
  Transcript(std::string problem, std::string digest) : problem_(std::move(problem)), digest_(std::move(digest)) {}

  const std::string& problem() const { return problem_; }
  const std::string& digest() const { return digest_; }
  const std::vector<Message>& messages() const { return messages_; }

  /// Throws InternalError if the role breaks alternation.
  void append(Role role, std::string payload);

  /// Header `problem:` / `instance-digest:`, then one `---` section per
  /// message starting with `role:`.
  std::string serialize() const;
  /// Throws ParseError.
  static Transcript parse(std::string_view text);

 private:
  std::string problem_;
  std::string digest_;
  std::vector<Message> messages_;
};

}  // namespace psd

#pragma once

// Canonical text serialization shared by instances, messages and transcripts:
// one `key: value` per line, base-10 integers, space-separated lists, `---`
// between sections. Bare rows (no key) are allowed inside instance bodies.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace psd::text {

struct Line {
  std::string key;  // empty for a bare row
  std::string value;
  bool keyed = false;
  bool separator = false;
};

std::vector<Line> split_lines(std::string_view text);
std::vector<std::string_view> tokens(std::string_view value);

// Strict base-10 parsers; throw ParseError.
std::int64_t parse_int(std::string_view token);
std::uint64_t parse_uint(std::string_view token);
std::vector<std::int64_t> parse_int_list(std::string_view value);
std::vector<std::uint64_t> parse_uint_list(std::string_view value);

template <class Range>
std::string join(const Range& values) {
  std::string out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += ' ';
    first = false;
    out += std::to_string(v);
  }
  return out;
}

/// Sequential reader over instance text. All failures throw ParseError.
class Reader {
 public:
  explicit Reader(std::string_view text);

  bool done() const { return pos_ >= lines_.size(); }
  std::string expect(std::string_view key);
  std::optional<std::string> accept(std::string_view key);
  std::string row();
  void expect_separator();
  void expect_end() const;

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

class Writer {
 public:
  Writer& field(std::string_view key, std::string_view value);
  Writer& field(std::string_view key, std::int64_t value);
  Writer& row(std::string_view value);
  Writer& separator();
  const std::string& str() const { return out_; }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

/// Ordered `key: value` map for prover and verifier messages. Getters throw
/// MalformedMessage, so verifiers can map any parse failure to Bot.
class Fields {
 public:
  Fields() = default;
  static Fields parse(std::string_view text);

  bool has(std::string_view key) const;
  const std::string& get(std::string_view key) const;
  std::int64_t get_int(std::string_view key) const;
  std::uint64_t get_uint(std::string_view key) const;
  std::vector<std::int64_t> get_int_list(std::string_view key) const;
  std::vector<std::uint64_t> get_uint_list(std::string_view key) const;

  void set(std::string_view key, std::string value);
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  std::vector<std::pair<std::string, std::string>>& entries() { return entries_; }
  std::string serialize() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace psd::text

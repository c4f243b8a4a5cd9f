#include "psd/core/text_format.hpp"

#include <charconv>
#include <limits>

#include "psd/core/errors.hpp"

namespace psd::text {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool is_key_char(char ch, bool first) {
  if ((ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z')) return true;
  if (first) return false;
  return (ch >= '0' && ch <= '9') || ch == '-' || ch == '_';
}

}  // namespace

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = trim(text.substr(start, end - start));
    start = end + 1;
    if (raw.empty() || raw.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    Line line;
    if (raw == "---") {
      line.separator = true;
      out.push_back(std::move(line));
      continue;
    }
    std::size_t colon = raw.find(':');
    bool keyed = colon != std::string_view::npos && colon > 0 &&
                 (colon + 1 == raw.size() || raw[colon + 1] == ' ');
    for (std::size_t i = 0; keyed && i < colon; ++i) keyed = is_key_char(raw[i], i == 0);
    if (keyed) {
      line.keyed = true;
      line.key = std::string(raw.substr(0, colon));
      line.value = std::string(trim(raw.substr(colon + 1)));
    } else {
      line.value = std::string(raw);
    }
    out.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view value) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < value.size()) {
    while (i < value.size() && (value[i] == ' ' || value[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < value.size() && value[j] != ' ' && value[j] != '\t') ++j;
    if (j > i) out.push_back(value.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_int(std::string_view token) {
  std::int64_t v = 0;
  if (token.size() > 1 && token[0] == '+') throw ParseError("bad integer '" + std::string(token) + "'");
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
    throw ParseError("bad integer '" + std::string(token) + "'");
  return v;
}

std::uint64_t parse_uint(std::string_view token) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
    throw ParseError("bad unsigned integer '" + std::string(token) + "'");
  return v;
}

std::vector<std::int64_t> parse_int_list(std::string_view value) {
  std::vector<std::int64_t> out;
  for (auto t : tokens(value)) out.push_back(parse_int(t));
  return out;
}

std::vector<std::uint64_t> parse_uint_list(std::string_view value) {
  std::vector<std::uint64_t> out;
  for (auto t : tokens(value)) out.push_back(parse_uint(t));
  return out;
}

Reader::Reader(std::string_view text) : lines_(split_lines(text)) {}

std::string Reader::expect(std::string_view key) {
  if (done()) throw ParseError("expected '" + std::string(key) + ":' but input ended");
  const Line& line = lines_[pos_];
  if (!line.keyed || line.key != key)
    throw ParseError("expected '" + std::string(key) + ":' near '" + line.key + line.value + "'");
  ++pos_;
  return line.value;
}

std::optional<std::string> Reader::accept(std::string_view key) {
  if (done() || !lines_[pos_].keyed || lines_[pos_].key != key) return std::nullopt;
  return lines_[pos_++].value;
}

std::string Reader::row() {
  if (done()) throw ParseError("expected a data row but input ended");
  const Line& line = lines_[pos_];
  if (line.keyed || line.separator) throw ParseError("expected a data row near '" + line.key + "'");
  ++pos_;
  return line.value;
}

void Reader::expect_separator() {
  if (done() || !lines_[pos_].separator) throw ParseError("expected '---'");
  ++pos_;
}

void Reader::expect_end() const {
  if (!done()) throw ParseError("trailing content after instance");
}

Writer& Writer::field(std::string_view key, std::string_view value) {
  out_ += key;
  out_ += ':';
  if (!value.empty()) {
    out_ += ' ';
    out_ += value;
  }
  out_ += '\n';
  return *this;
}

Writer& Writer::field(std::string_view key, std::int64_t value) { return field(key, std::to_string(value)); }

Writer& Writer::row(std::string_view value) {
  out_ += value;
  out_ += '\n';
  return *this;
}

Writer& Writer::separator() {
  out_ += "---\n";
  return *this;
}

Fields Fields::parse(std::string_view text) {
  Fields f;
  for (Line& line : split_lines(text)) {
    if (!line.keyed) throw MalformedMessage("message line is not 'key: value'");
    if (f.has(line.key)) throw MalformedMessage("duplicate key '" + line.key + "'");
    f.entries_.emplace_back(std::move(line.key), std::move(line.value));
  }
  return f;
}

bool Fields::has(std::string_view key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return true;
  return false;
}

const std::string& Fields::get(std::string_view key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  throw MalformedMessage("missing '" + std::string(key) + "'");
}

std::int64_t Fields::get_int(std::string_view key) const {
  try {
    return parse_int(get(key));
  } catch (const ParseError& e) {
    throw MalformedMessage(e.what());
  }
}

std::uint64_t Fields::get_uint(std::string_view key) const {
  try {
    return parse_uint(get(key));
  } catch (const ParseError& e) {
    throw MalformedMessage(e.what());
  }
}

std::vector<std::int64_t> Fields::get_int_list(std::string_view key) const {
  try {
    return parse_int_list(get(key));
  } catch (const ParseError& e) {
    throw MalformedMessage(e.what());
  }
}

std::vector<std::uint64_t> Fields::get_uint_list(std::string_view key) const {
  try {
    return parse_uint_list(get(key));
  } catch (const ParseError& e) {
    throw MalformedMessage(e.what());
  }
}

void Fields::set(std::string_view key, std::string value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::string(key), std::move(value));
}

std::string Fields::serialize() const {
  Writer w;
  for (const auto& [k, v] : entries_) w.field(k, v);
  return w.take();
}

}  // namespace psd::text

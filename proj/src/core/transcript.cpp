#include "psd/core/transcript.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

#include "psd/core/errors.hpp"
#include "psd/core/text_format.hpp"

namespace psd {

std::string instance_digest(std::string_view instance) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(instance.data(), instance.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw InternalError("sha256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 15];
  }
  return out;
}

void Transcript::append(Role role, std::string payload) {
  Role expected = messages_.size() % 2 == 0 ? Role::prover : Role::verifier;
  if (role != expected) throw InternalError("transcript roles must alternate starting with the prover");
  messages_.push_back({role, std::move(payload)});
}

std::string Transcript::serialize() const {
  text::Writer w;
  w.field("problem", problem_).field("instance-digest", digest_);
  for (const Message& m : messages_) {
    w.separator().field("role", to_string(m.role));
    for (const text::Line& line : text::split_lines(m.payload)) {
      if (line.keyed) w.field(line.key, line.value);
      else w.row(line.value);
    }
  }
  return w.take();
}

Transcript Transcript::parse(std::string_view text) {
  auto lines = text::split_lines(text);
  std::size_t pos = 0;
  auto header = [&](std::string_view key) {
    if (pos >= lines.size() || !lines[pos].keyed || lines[pos].key != key)
      throw ParseError("transcript: expected '" + std::string(key) + ":'");
    return lines[pos++].value;
  };
  std::string problem = header("problem");
  std::string digest = header("instance-digest");
  Transcript t(std::move(problem), std::move(digest));
  while (pos < lines.size()) {
    if (!lines[pos].separator) throw ParseError("transcript: expected '---'");
    ++pos;
    std::string role = header("role");
    Role r;
    if (role == "prover") r = Role::prover;
    else if (role == "verifier") r = Role::verifier;
    else throw ParseError("transcript: unknown role '" + role + "'");
    text::Writer payload;
    while (pos < lines.size() && !lines[pos].separator) {
      const text::Line& line = lines[pos++];
      if (line.keyed) payload.field(line.key, line.value);
      else payload.row(line.value);
    }
    try {
      t.append(r, payload.take());
    } catch (const InternalError& e) {
      throw ParseError(std::string("transcript: ") + e.what());
    }
  }
  return t;
}

}  // namespace psd

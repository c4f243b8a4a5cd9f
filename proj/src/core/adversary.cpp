#include "psd/core/adversary.hpp"

#include <array>
#include <utility>
#include <vector>

#include "psd/core/errors.hpp"
#include "psd/core/text_format.hpp"

namespace psd {
namespace {

constexpr std::array kKinds = {
    MutationKind::flip_solution_block, MutationKind::truncate_certificate, MutationKind::swap_certificate_entries,
    MutationKind::replace_prime,       MutationKind::inflate_count,        MutationKind::echo_honest,
    MutationKind::tamper_coefficients, MutationKind::perturb_field,
};

constexpr std::array<std::string_view, 8> kNames = {
    "flip-solution-block", "truncate-certificate", "swap-certificate-entries", "replace-prime",
    "inflate-count",       "echo-honest",          "tamper-coefficients",      "perturb-field",
};

// Keys that carry the claimed solution rather than certificate data.
constexpr std::array<std::string_view, 8> kSolutionKeys = {"solution", "indices", "pair",  "triangle",
                                                          "index",    "assignment", "x", "clique"};

bool is_solution_key(std::string_view key) {
  for (auto k : kSolutionKeys)
    if (k == key) return true;
  return false;
}

bool is_small_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// Rewrites one whitespace-separated token of a line value.
std::string edit_token(const std::string& value, RandomStream& rng) {
  auto toks = text::tokens(value);
  if (toks.empty()) return "0";
  std::size_t pick = rng.below(toks.size());
  std::string tok(toks[pick]);
  std::string replacement;
  std::int64_t delta = rng.coin(0.5) ? static_cast<std::int64_t>(1 + rng.below(3))
                                     : -static_cast<std::int64_t>(1 + rng.below(3));
  std::size_t slash = tok.find('/');
  try {
    if (slash != std::string::npos) {
      std::int64_t num = text::parse_int(std::string_view(tok).substr(0, slash));
      replacement = std::to_string(num + delta) + tok.substr(slash);
    } else {
      replacement = std::to_string(text::parse_int(tok) + delta);
    }
  } catch (const ParseError&) {
    replacement = tok == "none" ? "1" : "0";
  }
  std::string out;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i) out += ' ';
    out += i == pick ? replacement : std::string(toks[i]);
  }
  return out;
}

template <class Pred>
std::vector<std::size_t> matching(const text::Fields& f, Pred pred) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < f.entries().size(); ++i)
    if (pred(f.entries()[i].first, f.entries()[i].second)) idx.push_back(i);
  return idx;
}

std::string perturb_field(text::Fields f, RandomStream& rng) {
  if (f.entries().empty()) return "solution: 0\n";
  auto& entry = f.entries()[rng.below(f.entries().size())];
  entry.second = edit_token(entry.second, rng);
  return f.serialize();
}

}  // namespace

std::span<const MutationKind> all_mutation_kinds() { return kKinds; }

std::string_view to_string(MutationKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

std::optional<MutationKind> parse_mutation_kind(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return kKinds[i];
  return std::nullopt;
}

std::string generic_mutate(MutationKind kind, std::string_view message, RandomStream& rng) {
  if (kind == MutationKind::echo_honest) return std::string(message);
  text::Fields f;
  try {
    f = text::Fields::parse(message);
  } catch (const MalformedMessage&) {
    return std::string(message.substr(0, rng.below(message.size() + 1)));
  }
  auto& entries = f.entries();
  switch (kind) {
    case MutationKind::echo_honest:
      break;
    case MutationKind::flip_solution_block: {
      auto idx = matching(f, [](const std::string& k, const std::string&) { return is_solution_key(k); });
      if (idx.empty()) return perturb_field(std::move(f), rng);
      auto& value = entries[idx[rng.below(idx.size())]].second;
      value = edit_token(value, rng);
      return f.serialize();
    }
    case MutationKind::truncate_certificate: {
      if (rng.coin(0.5)) return std::string(message.substr(0, rng.below(message.size())));
      auto idx = matching(f, [](const std::string& k, const std::string& v) {
        return !is_solution_key(k) && !text::tokens(v).empty();
      });
      if (idx.empty()) return std::string(message.substr(0, message.size() / 2));
      auto& value = entries[idx[rng.below(idx.size())]].second;
      auto toks = text::tokens(value);
      std::size_t keep = rng.below(toks.size());
      std::string cut;
      for (std::size_t i = 0; i < keep; ++i) {
        if (i) cut += ' ';
        cut += toks[i];
      }
      value = cut;
      return f.serialize();
    }
    case MutationKind::swap_certificate_entries: {
      auto idx = matching(f, [](const std::string&, const std::string& v) {
        auto toks = text::tokens(v);
        for (std::size_t i = 1; i < toks.size(); ++i)
          if (toks[i] != toks[0]) return true;
        return false;
      });
      if (idx.empty()) return perturb_field(std::move(f), rng);
      auto& value = entries[idx[rng.below(idx.size())]].second;
      auto toks = text::tokens(value);
      std::size_t a = 0, b = 0;
      do {
        a = rng.below(toks.size());
        b = rng.below(toks.size());
      } while (toks[a] == toks[b]);
      std::vector<std::string> owned(toks.begin(), toks.end());
      std::swap(owned[a], owned[b]);
      std::string joined;
      for (std::size_t i = 0; i < owned.size(); ++i) {
        if (i) joined += ' ';
        joined += owned[i];
      }
      value = joined;
      return f.serialize();
    }
    case MutationKind::replace_prime: {
      auto idx = matching(f, [](const std::string& k, const std::string&) {
        return k.find("prime") != std::string::npos;
      });
      if (idx.empty()) return perturb_field(std::move(f), rng);
      auto& value = entries[idx[rng.below(idx.size())]].second;
      std::uint64_t p = 2;
      try {
        p = text::parse_uint(value);
      } catch (const ParseError&) {
      }
      std::uint64_t q = p;
      if (rng.coin(0.5) && p > 2) {
        do --q;
        while (q > 2 && !is_small_prime(q));
        if (!is_small_prime(q)) q = 3;
      } else {
        do ++q;
        while (!is_small_prime(q));
      }
      if (q == p) q = p == 2 ? 3 : 2;
      value = std::to_string(q);
      return f.serialize();
    }
    case MutationKind::inflate_count: {
      auto idx = matching(f, [](const std::string& k, const std::string&) {
        return k.find("count") != std::string::npos;
      });
      if (idx.empty()) return perturb_field(std::move(f), rng);
      auto& value = entries[idx[rng.below(idx.size())]].second;
      try {
        value = std::to_string(text::parse_uint(value) + 1 + rng.below(3));
      } catch (const ParseError&) {
        value = "1";
      }
      return f.serialize();
    }
    case MutationKind::tamper_coefficients: {
      auto idx = matching(f, [](const std::string& k, const std::string&) {
        return k.find("coefficient") != std::string::npos;
      });
      if (idx.empty()) return perturb_field(std::move(f), rng);
      auto& value = entries[idx[rng.below(idx.size())]].second;
      value = edit_token(value, rng);
      return f.serialize();
    }
    case MutationKind::perturb_field:
      return perturb_field(std::move(f), rng);
  }
  return std::string(message);
}

std::string mutate_message(const Problem& problem, MutationKind kind, std::string_view instance,
                           std::string_view message, RandomStream& rng) {
  if (kind == MutationKind::echo_honest) return std::string(message);
  if (auto specific = problem.mutate(kind, instance, message, rng)) return *std::move(specific);
  return generic_mutate(kind, message, rng);
}

std::string MutatingProver::first_message(std::string_view instance, RandomStream& rng) const {
  std::string honest = problem_.prover().first_message(instance, rng);
  RandomStream mutation_rng(policy_.seed, Role::prover);
  return mutate_message(problem_, policy_.kind, instance, honest, mutation_rng);
}

}  // namespace psd

#include "psd/core/lex_composer.hpp"

#include <algorithm>

#include "psd/core/errors.hpp"
#include "psd/core/text_format.hpp"

namespace psd {
namespace {

bool less_in(const LexSearchSpec& spec, std::size_t a, std::size_t b) {
  return spec.block_less ? spec.block_less(a, b) : a < b;
}

std::vector<std::size_t> ordered_domain(const LexSearchSpec& spec, std::size_t block) {
  std::vector<std::size_t> values(spec.block_domain[block]);
  for (std::size_t v = 0; v < values.size(); ++v) values[v] = v;
  std::sort(values.begin(), values.end(), [&](std::size_t a, std::size_t b) { return less_in(spec, a, b); });
  return values;
}

// Visits completions of blocks [from, k) in canonical order; stops when visit returns true.
bool any_completion(const LexSearchSpec& spec, std::vector<std::size_t>& y, std::size_t from,
                    const std::vector<std::vector<std::size_t>>& domains) {
  if (from == y.size()) return spec.existence_check(y);
  for (std::size_t v : domains[from]) {
    y[from] = v;
    if (any_completion(spec, y, from + 1, domains)) return true;
  }
  return false;
}

std::string default_render(Blocks y) { return "solution: " + text::join(y) + "\n"; }

void validate(const LexSearchSpec& spec) {
  if (spec.block_domain.empty()) throw ConfigError("lex composer: block count must be positive");
  for (std::size_t size : spec.block_domain)
    if (size == 0) throw ConfigError("lex composer: empty block domain");
  if (!spec.existence_check || !spec.prefix_nonexistence_check)
    throw ConfigError("lex composer: existence and prefix-nonexistence checks are required");
}

struct Shared {
  LexSearchSpec spec;
  std::string instance;

  void bind(std::string_view given) const {
    if (given != instance) throw ConfigError("lex composer handle used with a different instance");
  }
  std::string render(Blocks y) const { return spec.render ? spec.render(y) : default_render(y); }
};

class ComposedProver final : public Prover {
 public:
  explicit ComposedProver(std::shared_ptr<const Shared> s) : s_(std::move(s)) {}
  std::string_view problem() const override { return s_->spec.problem; }

  std::string first_message(std::string_view instance, RandomStream&) const override {
    s_->bind(instance);
    text::Fields f;
    auto y = lex_first_solution(s_->spec);
    if (!y) {
      f.set("solution", "none");
      return f.serialize();
    }
    f.set("solution", text::join(*y));
    for (std::size_t i = 0; i < y->size(); ++i) {
      std::string cert = s_->spec.prefix_certify ? s_->spec.prefix_certify(*y, i) : std::string();
      f.set("certificate-" + std::to_string(i + 1), std::move(cert));
    }
    return f.serialize();
  }

 private:
  std::shared_ptr<const Shared> s_;
};

class ComposedVerifier final : public Verifier {
 public:
  explicit ComposedVerifier(std::shared_ptr<const Shared> s) : s_(std::move(s)) {}
  std::string_view problem() const override { return s_->spec.problem; }

  VerifierDecision decide(std::string_view instance, std::string_view message, RandomStream&) const override {
    s_->bind(instance);
    ProtocolOutcome out = judge(message);
    return {out, verifier_record(out)};
  }

 private:
  ProtocolOutcome judge(std::string_view message) const {
    const LexSearchSpec& spec = s_->spec;
    try {
      auto f = text::Fields::parse(message);
      if (f.get("solution") == "none") return ProtocolOutcome::bot("no-solution-claimed");
      auto raw = f.get_uint_list("solution");
      if (raw.size() != spec.block_count()) return ProtocolOutcome::bot("wrong-block-count");
      std::vector<std::size_t> y(raw.begin(), raw.end());
      for (std::size_t i = 0; i < y.size(); ++i)
        if (y[i] >= spec.block_domain[i]) return ProtocolOutcome::bot("block-out-of-domain");
      if (!spec.existence_check(y)) return ProtocolOutcome::bot("not-a-solution");
      for (std::size_t i = 0; i < y.size(); ++i) {
        std::string key = "certificate-" + std::to_string(i + 1);
        std::string cert = f.has(key) ? f.get(key) : std::string();
        if (!spec.prefix_nonexistence_check(y, i, cert)) return ProtocolOutcome::bot("earlier-solution-not-excluded");
      }
      return ProtocolOutcome::canonical(s_->render(y));
    } catch (const MalformedMessage&) {
      return ProtocolOutcome::bot("malformed-message");
    }
  }

  std::shared_ptr<const Shared> s_;
};

}  // namespace

std::function<bool(Blocks, std::size_t, std::string_view)> brute_force_prefix_check(const LexSearchSpec& spec) {
  LexSearchSpec copy = spec;
  std::vector<std::vector<std::size_t>> domains;
  for (std::size_t i = 0; i < spec.block_count(); ++i) domains.push_back(ordered_domain(spec, i));
  return [copy, domains](Blocks y, std::size_t block, std::string_view) {
    std::vector<std::size_t> z(y.begin(), y.end());
    for (std::size_t v : domains[block]) {
      if (!less_in(copy, v, y[block])) continue;
      z[block] = v;
      if (any_completion(copy, z, block + 1, domains)) return false;
    }
    return true;
  };
}

std::optional<std::vector<std::size_t>> lex_first_solution(const LexSearchSpec& spec) {
  validate(spec);
  std::vector<std::vector<std::size_t>> domains;
  for (std::size_t i = 0; i < spec.block_count(); ++i) domains.push_back(ordered_domain(spec, i));
  std::vector<std::size_t> y(spec.block_count());
  if (any_completion(spec, y, 0, domains)) return y;
  return std::nullopt;
}

ProtocolPair compose_lex_first(LexSearchSpec spec, std::string instance) {
  validate(spec);
  auto shared = std::make_shared<const Shared>(Shared{std::move(spec), std::move(instance)});
  return {std::make_unique<ComposedProver>(shared), std::make_unique<ComposedVerifier>(shared)};
}

}  // namespace psd

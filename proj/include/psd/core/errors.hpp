#pragma once

#include <stdexcept>
#include <string>

namespace psd {

/// Malformed instance text or file. Distinct from a verifier rejection.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed prover message. Verifiers turn this into Bot, never into an error.
class MalformedMessage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched prover/verifier tags, empty search spaces, bad parameters.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The honest prover drew too many primes whose false-positive lists were oversized.
class RetryExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace psd

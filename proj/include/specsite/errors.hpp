#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace specsite {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad user input: malformed files, unknown ids, invalid algebras.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A brute-force search exceeded its step budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class SignatureMismatch : public InputError {
 public:
  using Error::Error;
};

class NotSurjective : public InputError {
 public:
  using Error::Error;
};

class NotAFunctor : public InputError {
 public:
  using Error::Error;
};

/// The plugin's step rule failed to make progress (a plugin bug).
class StepRuleDiverged : public Error {
 public:
  using Error::Error;
};

/// A syntactic plugin test disagreed with its brute-force referee.
class OracleDisagreement : public Error {
 public:
  using Error::Error;
};

/// A theorem of the underlying theory failed on a concrete instance.
/// Carries a witness description; any of these makes a run exit 1.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

class AdmissibilityViolation : public VerificationFailure {
 public:
  using Error::Error;
};

class CompletenessGap : public VerificationFailure {
 public:
  using Error::Error;
};

class StalkMismatch : public VerificationFailure {
 public:
  using Error::Error;
};

class UniversalityGap : public VerificationFailure {
 public:
  using Error::Error;
};

class RestrictionMismatch : public VerificationFailure {
 public:
  using Error::Error;
};

class EquivalenceViolation : public VerificationFailure {
 public:
  using Error::Error;
};

class ReconstructionFailure : public VerificationFailure {
 public:
  using Error::Error;
};

class NotLocalInput : public InputError {
 public:
  using Error::Error;
};

/// Step counter shared by the brute-force searches. Every enumerator
/// charges its node visits here so runaway searches fail loudly.
struct Budget {
  std::int64_t remaining = 1'000'000;

  void spend(std::int64_t n = 1) {
    remaining -= n;
    if (remaining < 0) throw BudgetExceeded("search budget exhausted");
  }

  static Budget from_env() {
    Budget b;
    if (const char* s = std::getenv("SPECSITE_BUDGET")) {
      char* end = nullptr;
      long long v = std::strtoll(s, &end, 10);
      if (end && *end == '\0' && v > 0) b.remaining = v;
    }
    return b;
  }
};

}  // namespace specsite

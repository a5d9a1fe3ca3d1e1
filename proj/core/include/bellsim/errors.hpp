#pragma once

#include <stdexcept>
#include <string>

namespace bellsim {

/// Base class for all bellsim error conditions.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A denominator or normalizer is zero (x + y = 0, Z = 0, ...).
struct DegenerateInput : Error {
  using Error::Error;
};

/// A table lacks an entry (22.5deg, 67.5deg, z, Z) required by a statistic.
struct MissingSetting : Error {
  using Error::Error;
};

/// Subtraction drove a count below zero. Carries the offending key.
struct NegativeResult : Error {
  NegativeResult(const std::string& key, double value)
      : Error("subtraction below zero at '" + key + "' (result " +
              std::to_string(value) + ")"),
        key(key) {}
  std::string key;
};

/// A hidden-variable model returned a weight or response outside its range.
struct InvalidSpec : Error {
  using Error::Error;
};

/// An operation was called outside its stated preconditions.
struct PreconditionViolation : Error {
  using Error::Error;
};

/// Fewer or narrower emission rates than a scaling study needs.
struct InsufficientRates : Error {
  using Error::Error;
};

/// A configuration value failed validation. Carries the offending key.
struct InvalidConfig : Error {
  InvalidConfig(const std::string& key, const std::string& reason)
      : Error("config key '" + key + "': " + reason), key(key) {}
  std::string key;
};

/// A file could not be parsed. Carries the 1-based line number.
struct ParseError : Error {
  ParseError(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line(line) {}
  std::size_t line;
};

}  // namespace bellsim

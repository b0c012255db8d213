#pragma once

#include <stdexcept>
#include <string>

namespace pctrank {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data (bad rows, undecodable bytes, missing columns).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Structurally valid input that violates a data invariant
// (duplicate ids, missing tie-break covariates, empty record sets).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// Invalid option or parameter combination (bad method selector,
// out-of-range plotting-position argument, unknown scheme).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace pctrank

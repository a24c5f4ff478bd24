#pragma once

#include <stdexcept>
#include <string>

namespace dq {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: expressions, config files, arity/universe mismatches.
/// The CLI maps these to exit code 2.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// A mathematically invalid request (exp of a series with constant term,
/// non-central ideal generator, singular level set, ...). Exit code 1.
class MathError : public Error {
 public:
  explicit MathError(const std::string& what) : Error(what) {}
};

}  // namespace dq

#pragma once

#include <stdexcept>
#include <string>

namespace curv2k {

/// Precondition violated by the caller (bad dimension, out-of-range alpha, ...).
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative routine failed to converge or produced a non-finite value.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed descriptor document. `path()` is a JSON-pointer-like location.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

/// Well-formed input that breaks a domain invariant (e.g. sphere of dim 1).
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace curv2k

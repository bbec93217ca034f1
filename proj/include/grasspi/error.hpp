#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grasspi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation applied outside its mathematical domain (inverse of zero,
/// degree of the zero polynomial, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Incompatible or unsupported field / generator-bound configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Enumeration or instance-count bound exceeded.
class BoundError : public Error {
 public:
  using Error::Error;
};

/// An outcome the mathematics guarantees did not hold; always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace grasspi

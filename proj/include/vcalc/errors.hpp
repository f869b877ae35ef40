#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Expression text could not be parsed; `position` is a 0-based byte offset.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct UnknownIdentifierError : ParseError {
  using ParseError::ParseError;
};

// Evaluation left the domain of an elementary function (ln of a
// non-positive value, sqrt of a negative value, division by zero).
struct DomainError : Error {
  using Error::Error;
};

struct NotInvertibleError : Error {
  using Error::Error;
};

// A sequence-tier inversion hit an exactly-zero sample.
struct PointwiseZeroError : Error {
  long long index;
  explicit PointwiseZeroError(long long n)
      : Error("pointwise zero at index " + std::to_string(n)), index(n) {}
};

// Symbolic differentiation or a Taylor lift met a node it cannot handle.
struct NonSmoothError : Error {
  using Error::Error;
};

// A virtual-only literal (inf, del, (+-), O(...)) reached a real-only path.
struct VirtualOnlyError : Error {
  using Error::Error;
};

struct UnsupportedSetError : Error {
  using Error::Error;
};

struct DegenerateIntervalError : Error {
  using Error::Error;
};

struct NotPositiveError : Error {
  using Error::Error;
};

struct NotInteriorError : Error {
  using Error::Error;
};

struct UnknownSuiteError : Error {
  using Error::Error;
};

}  // namespace vc

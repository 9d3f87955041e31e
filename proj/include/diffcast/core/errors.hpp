#pragma once

#include <stdexcept>
#include <string>

namespace diffcast {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested index range falls outside a series.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Two series that must share an index range do not.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

/// An input violates an operation's domain (too short, improper, empty, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configuration object is inconsistent (e.g. window shorter than 2n).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// The regression has no information at all (all-zero regressor).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// Exact evaluation failed, e.g. every drawn point was a pole.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

}  // namespace diffcast

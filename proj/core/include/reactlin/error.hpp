#pragma once

#include <stdexcept>
#include <string>

namespace reactlin {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite entries, parameters outside their documented range.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The requested quantity is not defined for this system (wrong
/// classification, form that does not exist, ...).
class Inapplicable : public Error {
 public:
  using Error::Error;
};

/// A closed form exists only for part of the domain; the caller should use
/// the numerical oracle instead.
class NeedsNumeric : public Error {
 public:
  using Error::Error;
};

/// Integration did not converge, or two routes that must agree did not.
class NumericFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace reactlin

#pragma once

#include <stdexcept>
#include <string>

namespace ctrlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A lattice point or named value map does not match the ground set of a system.
class DomainMismatch : public Error {
 public:
  DomainMismatch(const std::string& message, std::string element)
      : Error(message), element_(std::move(element)) {}
  const std::string& element() const { return element_; }

 private:
  std::string element_;
};

/// An operation was called on an argument outside its stated precondition.
/// `constraint()` names the violated constraint when one applies.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& message, std::string constraint = {})
      : Error(message), constraint_(std::move(constraint)) {}
  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

/// Bound derivation left some coordinate unbounded, so no finite search box exists.
class UnboundedEnumeration : public Error {
 public:
  using Error::Error;
};

/// Malformed user input: schema violations, cyclic relations, bad indices.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace ctrlab

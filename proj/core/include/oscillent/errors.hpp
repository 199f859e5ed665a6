#pragma once

#include <stdexcept>
#include <string>

namespace oscillent {

/// Parameter outside its mathematical domain (non-positive mass, mu1 outside (0,1), ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation called on a system or state it does not support.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A numerical self-consistency check failed (imaginary residue, singular matrix, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured computational cap was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oscillent

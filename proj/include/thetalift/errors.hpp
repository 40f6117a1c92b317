#pragma once

#include <stdexcept>
#include <string>

namespace thetalift {

// Bad input or violated precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Series evaluation requested outside the range where its tail bound holds.
class SeriesRangeError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A floating-point result could not be certified at the required accuracy.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity that must hold by construction failed; indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace thetalift

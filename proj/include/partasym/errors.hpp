#pragma once

#include <stdexcept>
#include <string>

namespace partasym {

/// Bad caller input: non-coprime (h,k), odd r where even is required, grading mismatch, ...
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation at a pole (Γ at a non-positive integer, ζ at 1).
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical self-check failed (non-converging sum, spurious imaginary part).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace partasym

#pragma once

#include <stdexcept>

namespace paircoh {

// Input outside the mathematical domain of an operation (CLI exit code 3).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requested truncation or dense dimension exceeds a hard cap (CLI exit code 3).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Non-convergence or oracle mismatch (CLI exit code 4).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller broke a precondition that is not a domain restriction, e.g. a
// non-Hermitian matrix handed to the eigensolver.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace paircoh

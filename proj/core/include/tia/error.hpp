#pragma once

#include <stdexcept>
#include <string>

namespace tia {

// Input or geometry that violates a precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by enumerators when the configured search budget would be exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace tia

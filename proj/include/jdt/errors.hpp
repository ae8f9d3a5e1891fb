#ifndef JDT_ERRORS_HPP
#define JDT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jdt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two operands belong to different field specifications.
struct FieldMismatch : Error {
  using Error::Error;
};

// An enumeration would exceed the configured codeword budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

// A result guaranteed to be integral came out fractional.
struct IntegralityError : Error {
  using Error::Error;
};

// Malformed text input (polynomials, matrix files, field specs, CLI values).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace jdt

#endif

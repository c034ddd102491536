#ifndef PMINT_ERROR_HPP
#define PMINT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pmint {

/// Malformed or out-of-range input (bad ids, bad sizes, over-budget strategies).
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Text instance that fails to parse; carries the 1-based line and column.
class ParseError : public InputError {
public:
  ParseError(int line, int column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

class BudgetError : public InputError {
public:
  using InputError::InputError;
};

/// Exhaustive solver asked to handle an instance beyond its size limit.
class SizeError : public InputError {
public:
  using InputError::InputError;
};

/// A specialized algorithm was invoked on an instance outside its domain.
class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

}  // namespace pmint

#endif  // PMINT_ERROR_HPP

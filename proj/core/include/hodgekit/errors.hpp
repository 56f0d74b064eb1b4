#pragma once

#include <stdexcept>
#include <string>

namespace hodgekit {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in spaces of different dimension, or ranks disagree.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A structure failed validation where a valid one was required.
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

/// Weights or coefficient conventions of two operands are incompatible.
class IncompatibleOperands : public Error {
 public:
  using Error::Error;
};

/// A filtration whose steps F^p and conj(F^{n-p+1}) fail to be complementary.
class NotOpposed : public Error {
 public:
  NotOpposed(int index, const std::string& what) : Error(what), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

/// Text or JSON input that does not match the expected schema. `pointer` is a
/// JSON pointer (or a column marker for text input) naming the offending key.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& what)
      : Error(pointer.empty() ? what : pointer + ": " + what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

/// Weierstrass curve with vanishing discriminant.
class SingularCurve : public Error {
 public:
  using Error::Error;
};

/// A numerical routine failed to converge or its cross-check disagreed.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace hodgekit

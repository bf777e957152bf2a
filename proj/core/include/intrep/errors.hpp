#pragma once

#include <stdexcept>
#include <string>

namespace intrep {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct CycleError : Error {
  using Error::Error;
};
struct UnknownLabel : Error {
  using Error::Error;
};
struct InvalidSize : Error {
  using Error::Error;
};
struct EmptyInput : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};
struct NotConnected : Error {
  using Error::Error;
};
struct ShapeMismatch : Error {
  using Error::Error;
};
struct CommutativityViolation : Error {
  using Error::Error;
};
struct NotComparable : Error {
  using Error::Error;
};
struct FieldMismatch : Error {
  using Error::Error;
};
struct PosetMismatch : Error {
  using Error::Error;
};
struct NotAGrid : Error {
  using Error::Error;
};
struct NoComparablePair : Error {
  using Error::Error;
};
struct NotContained : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace intrep

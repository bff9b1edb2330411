#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gbfan {

/// Every recoverable failure in the library carries one of these codes.
/// The CLI maps ParseError to exit 2, Internal to exit 4 and everything
/// else to exit 3.
enum class ErrorKind {
  ParseError,
  DivisionByZero,
  FieldMismatch,
  RingMismatch,
  DimensionMismatch,
  InvalidOrdering,
  ZeroPolynomial,
  NotZeroDimensional,
  ZeroIdealDivisor,
  InconsistentMarking,
  UnsupportedIdealClass,
  ZeroIdeal,
  BoundExceeded,
  EmptyPointSet,
  RepeatedRoot,
  RepeatedConstant,
  SpecTooShort,
  InfiniteOrderIdeal,
  CharacteristicTooSmall,
  NotContaining,
  ComplementarityCertificateFailed,
  NotSubset,
  NotGrid,
  RationalsNotFinite,
  FactorProductMismatch,
  InvalidArgument,
  Internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace gbfan

#include "gbfan/errors.hpp"

namespace gbfan {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidOrdering: return "InvalidOrdering";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::ZeroIdealDivisor: return "ZeroIdealDivisor";
    case ErrorKind::InconsistentMarking: return "InconsistentMarking";
    case ErrorKind::UnsupportedIdealClass: return "UnsupportedIdealClass";
    case ErrorKind::ZeroIdeal: return "ZeroIdeal";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::EmptyPointSet: return "EmptyPointSet";
    case ErrorKind::RepeatedRoot: return "RepeatedRoot";
    case ErrorKind::RepeatedConstant: return "RepeatedConstant";
    case ErrorKind::SpecTooShort: return "SpecTooShort";
    case ErrorKind::InfiniteOrderIdeal: return "InfiniteOrderIdeal";
    case ErrorKind::CharacteristicTooSmall: return "CharacteristicTooSmall";
    case ErrorKind::NotContaining: return "NotContaining";
    case ErrorKind::ComplementarityCertificateFailed: return "ComplementarityCertificateFailed";
    case ErrorKind::NotSubset: return "NotSubset";
    case ErrorKind::NotGrid: return "NotGrid";
    case ErrorKind::RationalsNotFinite: return "RationalsNotFinite";
    case ErrorKind::FactorProductMismatch: return "FactorProductMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace gbfan

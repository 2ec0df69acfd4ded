#include "charcount/errors.hpp"

namespace charcount {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonzeroRemainder: return "NonzeroRemainder";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DisconnectedCentre: return "DisconnectedCentre";
    case ErrorKind::InvalidDatum: return "InvalidDatum";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::FactorizationFailed: return "FactorizationFailed";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::DuplicateType: return "DuplicateType";
    case ErrorKind::NotEndoscopy: return "NotEndoscopy";
    case ErrorKind::NotLevi: return "NotLevi";
    case ErrorKind::MissingData: return "MissingData";
    case ErrorKind::EmptyVariety: return "EmptyVariety";
    case ErrorKind::GoldenMismatch: return "GoldenMismatch";
  }
  return "Error";
}

}  // namespace charcount

#pragma once

#include <stdexcept>
#include <string>

namespace charcount {

enum class ErrorKind {
  NonzeroRemainder,
  DivisionByZero,
  DisconnectedCentre,
  InvalidDatum,
  GroupTooLarge,
  FactorizationFailed,
  NotComparable,
  ParseError,
  InvariantViolation,
  DuplicateType,
  NotEndoscopy,
  NotLevi,
  MissingData,
  EmptyVariety,
  GoldenMismatch,
};

const char* error_kind_name(ErrorKind kind);

// Base of every domain error raised by the library. what() carries the
// kind name as a prefix so the CLI can print it verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

template <ErrorKind K>
class KindError : public Error {
 public:
  explicit KindError(const std::string& detail) : Error(K, detail) {}
};

using NonzeroRemainder = KindError<ErrorKind::NonzeroRemainder>;
using DivisionByZero = KindError<ErrorKind::DivisionByZero>;
using DisconnectedCentre = KindError<ErrorKind::DisconnectedCentre>;
using InvalidDatum = KindError<ErrorKind::InvalidDatum>;
using GroupTooLarge = KindError<ErrorKind::GroupTooLarge>;
using FactorizationFailed = KindError<ErrorKind::FactorizationFailed>;
using NotComparable = KindError<ErrorKind::NotComparable>;
using ParseError = KindError<ErrorKind::ParseError>;
using DuplicateType = KindError<ErrorKind::DuplicateType>;
using NotEndoscopy = KindError<ErrorKind::NotEndoscopy>;
using NotLevi = KindError<ErrorKind::NotLevi>;
using MissingData = KindError<ErrorKind::MissingData>;
using EmptyVariety = KindError<ErrorKind::EmptyVariety>;
using GoldenMismatch = KindError<ErrorKind::GoldenMismatch>;

class InvariantViolation : public Error {
 public:
  InvariantViolation(const std::string& name, const std::string& detail)
      : Error(ErrorKind::InvariantViolation, name + ": " + detail), name_(name) {}
  const std::string& invariant() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace charcount

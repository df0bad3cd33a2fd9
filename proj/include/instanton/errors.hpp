#pragma once

#include <stdexcept>
#include <string>

namespace instanton {

enum class ErrorKind {
  // input errors (CLI exit code 2)
  NegativeExponentInput,
  NegativeUExponent,
  NonzeroDivisorRestriction,
  CurveMissesOrigin,
  NonReducedGerm,
  SyntaxError,
  UnknownVariable,
  InfeasibleGrid,
  BadConfig,
  // solver / certification errors (CLI exit code 3)
  StabilizationFailure,
  BoundViolation,
  NonIsolatedSingularity,
  ExtensionFieldRecursionUnsupported,
  ParityViolation,
  InternalLimit,
  // table diffing (CLI exit code 4)
  TableMismatch,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

  bool isInputError() const {
    switch (kind_) {
      case ErrorKind::StabilizationFailure:
      case ErrorKind::BoundViolation:
      case ErrorKind::NonIsolatedSingularity:
      case ErrorKind::ExtensionFieldRecursionUnsupported:
      case ErrorKind::ParityViolation:
      case ErrorKind::InternalLimit:
        return false;
      case ErrorKind::TableMismatch:
        return false;
      default:
        return true;
    }
  }

 private:
  ErrorKind kind_;
};

const char* errorKindName(ErrorKind k);

}  // namespace instanton

#include "instanton/errors.hpp"

namespace instanton {

const char* errorKindName(ErrorKind k) {
  switch (k) {
    case ErrorKind::NegativeExponentInput: return "NegativeExponentInput";
    case ErrorKind::NegativeUExponent: return "NegativeUExponent";
    case ErrorKind::NonzeroDivisorRestriction: return "NonzeroDivisorRestriction";
    case ErrorKind::CurveMissesOrigin: return "CurveMissesOrigin";
    case ErrorKind::NonReducedGerm: return "NonReducedGerm";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::InfeasibleGrid: return "InfeasibleGrid";
    case ErrorKind::BadConfig: return "BadConfig";
    case ErrorKind::StabilizationFailure: return "StabilizationFailure";
    case ErrorKind::BoundViolation: return "BoundViolation";
    case ErrorKind::NonIsolatedSingularity: return "NonIsolatedSingularity";
    case ErrorKind::ExtensionFieldRecursionUnsupported:
      return "ExtensionFieldRecursionUnsupported";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::InternalLimit: return "InternalLimit";
    case ErrorKind::TableMismatch: return "TableMismatch";
  }
  return "UnknownError";
}

}  // namespace instanton

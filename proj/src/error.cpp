#include "hopfdual/error.hpp"

namespace hopfdual {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::AntipodeAbsent: return "AntipodeAbsent";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::CharDividesOrder: return "CharDividesOrder";
    case ErrorCode::NotASection: return "NotASection";
    case ErrorCode::InsufficientRoots: return "InsufficientRoots";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotPositivelyGraded: return "NotPositivelyGraded";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::UnsupportedPreset: return "UnsupportedPreset";
    case ErrorCode::CharacteristicNotZero: return "CharacteristicNotZero";
    case ErrorCode::OutOfTruncation: return "OutOfTruncation";
  }
  return "Unknown";
}

}  // namespace hopfdual

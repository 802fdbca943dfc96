#include "cq/core/error.hpp"

namespace cq {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorCode::NonInvertibleElement: return "NonInvertibleElement";
    case ErrorCode::IdenticallyZero: return "IdenticallyZero";
    case ErrorCode::NotBasepointFree: return "NotBasepointFree";
    case ErrorCode::DegeneratePencil: return "DegeneratePencil";
    case ErrorCode::LineInsideCubic: return "LineInsideCubic";
    case ErrorCode::ExcludedParameter: return "ExcludedParameter";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::NotFrobenius: return "NotFrobenius";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::OnDiscriminant: return "OnDiscriminant";
    case ErrorCode::SingularConic: return "SingularConic";
    case ErrorCode::PointNotOnConic: return "PointNotOnConic";
    case ErrorCode::DenominatorClearFailed: return "DenominatorClearFailed";
    case ErrorCode::IrrationalSpecialLine: return "IrrationalSpecialLine";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace cq

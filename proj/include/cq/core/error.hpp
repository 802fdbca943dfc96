#pragma once

#include <stdexcept>
#include <string>

namespace cq {

enum class ErrorCode {
  InvalidInput,
  BothZero,
  ZeroPolynomial,
  DegreeBoundExceeded,
  NonInvertibleElement,
  IdenticallyZero,
  NotBasepointFree,
  DegeneratePencil,
  LineInsideCubic,
  ExcludedParameter,
  BoundTooSmall,
  NotFrobenius,
  NotAssociative,
  NotCommutative,
  InternalInconsistency,
  OnDiscriminant,
  SingularConic,
  PointNotOnConic,
  DenominatorClearFailed,
  IrrationalSpecialLine,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace cq

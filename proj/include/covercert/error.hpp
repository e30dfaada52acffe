#ifndef COVERCERT_ERROR_HPP
#define COVERCERT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace covercert {

// Every failure mode of the library is one of these codes. Errors that are
// ordinary return values (e.g. a ramified verdict) are not listed here.
enum class Err {
  ZeroInverse,
  ReducibleField,
  PrecisionExhausted,
  IndeterminateOrder,
  InsufficientPrecision,
  HypothesisFailed,
  PrefixCoincidence,
  RootsOutsideField,
  RamifiedAtInfinity,
  WrongPoleShape,
  WrongPoleOrder,
  UnclassifiedDiscriminantRoot,
  RamifiedAtDeclaredBeta,
  DeclaredPointNotRamified,
  NotSquarefreeAfterReduction,
  NoAdmissibleShift,
  DegenerateSubstitution,
  TooFewEquations,
  DimensionMismatch,
  PositiveDimensional,
  InvalidInput,
  Unsupported,
  Internal,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::ZeroInverse: return "ZeroInverse";
    case Err::ReducibleField: return "ReducibleField";
    case Err::PrecisionExhausted: return "PrecisionExhausted";
    case Err::IndeterminateOrder: return "IndeterminateOrder";
    case Err::InsufficientPrecision: return "InsufficientPrecision";
    case Err::HypothesisFailed: return "HypothesisFailed";
    case Err::PrefixCoincidence: return "PrefixCoincidence";
    case Err::RootsOutsideField: return "RootsOutsideField";
    case Err::RamifiedAtInfinity: return "RamifiedAtInfinity";
    case Err::WrongPoleShape: return "WrongPoleShape";
    case Err::WrongPoleOrder: return "WrongPoleOrder";
    case Err::UnclassifiedDiscriminantRoot: return "UnclassifiedDiscriminantRoot";
    case Err::RamifiedAtDeclaredBeta: return "RamifiedAtDeclaredBeta";
    case Err::DeclaredPointNotRamified: return "DeclaredPointNotRamified";
    case Err::NotSquarefreeAfterReduction: return "NotSquarefreeAfterReduction";
    case Err::NoAdmissibleShift: return "NoAdmissibleShift";
    case Err::DegenerateSubstitution: return "DegenerateSubstitution";
    case Err::TooFewEquations: return "TooFewEquations";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::PositiveDimensional: return "PositiveDimensional";
    case Err::InvalidInput: return "InvalidInput";
    case Err::Unsupported: return "Unsupported";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Err code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace covercert

#endif

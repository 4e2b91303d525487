#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pfrac {

// Domain error codes. The CLI prints code_name() verbatim, so keep the
// enumerator spelling and the string table in error.cpp in sync.
enum class ErrorCode {
  // construction / validation
  InvalidRational,
  InvalidAlphaSequence,
  InvalidExpansion,
  InvalidTriple,
  InvalidJacobiTriple,
  InvalidDivisor,
  InvalidGenerator,
  // alphafrac
  DegenerateExpansion,
  NotAdmissible,
  NotMonic,
  TraceMismatch,
  DeterminantMismatch,
  FactorizationDegenerate,
  ResidueNotUnipotent,
  NotPure,
  NonGenericPure,
  PoleAtLambda,
  // symmetry
  ZeroPivot,
  // jacobi
  PointOffCurve,
  RepeatedAbscissa,
  SpecialDivisor,
  IrrationalSupport,
  IrrationalBeta,
  RootOfR,
  // cli
  UnknownExample,
  // arithmetic
  DivisionByZero,
  InexactDivision,
};

std::string_view code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(code_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace pfrac

#include "pfrac/error.hpp"

namespace pfrac {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidRational: return "InvalidRational";
    case ErrorCode::InvalidAlphaSequence: return "InvalidAlphaSequence";
    case ErrorCode::InvalidExpansion: return "InvalidExpansion";
    case ErrorCode::InvalidTriple: return "InvalidTriple";
    case ErrorCode::InvalidJacobiTriple: return "InvalidJacobiTriple";
    case ErrorCode::InvalidDivisor: return "InvalidDivisor";
    case ErrorCode::InvalidGenerator: return "InvalidGenerator";
    case ErrorCode::DegenerateExpansion: return "DegenerateExpansion";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::TraceMismatch: return "TraceMismatch";
    case ErrorCode::DeterminantMismatch: return "DeterminantMismatch";
    case ErrorCode::FactorizationDegenerate: return "FactorizationDegenerate";
    case ErrorCode::ResidueNotUnipotent: return "ResidueNotUnipotent";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::NonGenericPure: return "NonGenericPure";
    case ErrorCode::PoleAtLambda: return "PoleAtLambda";
    case ErrorCode::ZeroPivot: return "ZeroPivot";
    case ErrorCode::PointOffCurve: return "PointOffCurve";
    case ErrorCode::RepeatedAbscissa: return "RepeatedAbscissa";
    case ErrorCode::SpecialDivisor: return "SpecialDivisor";
    case ErrorCode::IrrationalSupport: return "IrrationalSupport";
    case ErrorCode::IrrationalBeta: return "IrrationalBeta";
    case ErrorCode::RootOfR: return "RootOfR";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InexactDivision: return "InexactDivision";
  }
  return "Unknown";
}

}  // namespace pfrac

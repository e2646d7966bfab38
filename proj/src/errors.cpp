#include "basicfn/errors.hpp"

#include <utility>

namespace basicfn {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CartanViolation: return "CartanViolation";
    case ErrorKind::GradingViolation: return "GradingViolation";
    case ErrorKind::InfiniteWeyl: return "InfiniteWeyl";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::DatumMismatch: return "DatumMismatch";
    case ErrorKind::NonPositiveGrading: return "NonPositiveGrading";
    case ErrorKind::NotStronglyConvex: return "NotStronglyConvex";
    case ErrorKind::PsiNotCertified: return "PsiNotCertified";
    case ErrorKind::NotAntiDominant: return "NotAntiDominant";
    case ErrorKind::NotWInvariant: return "NotWInvariant";
    case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorKind::IrrationalHalfPower: return "IrrationalHalfPower";
    case ErrorKind::NotSaturated: return "NotSaturated";
    case ErrorKind::DegenerateParameter: return "DegenerateParameter";
    case ErrorKind::NotSimplyConnected: return "NotSimplyConnected";
    case ErrorKind::XiNotAntiDominant: return "XiNotAntiDominant";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InternalMismatch: return "InternalMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

NotStronglyConvexError::NotStronglyConvexError(std::vector<mpq_class> witness,
                                               const std::string& detail)
    : Error(ErrorKind::NotStronglyConvex, detail), witness_(std::move(witness)) {}

void fail(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

}  // namespace basicfn

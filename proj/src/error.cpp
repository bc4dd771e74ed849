#include "entdeg/error.hpp"

namespace entdeg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::OrderCap: return "OrderCap";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NotSchmidtForm: return "NotSchmidtForm";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::NotLossless: return "NotLossless";
    case ErrorCode::NonPhysical: return "NonPhysical";
    case ErrorCode::TruncationError: return "TruncationError";
    case ErrorCode::MemoryCap: return "MemoryCap";
    case ErrorCode::NotPhysical: return "NotPhysical";
    case ErrorCode::PureStateDivergence: return "PureStateDivergence";
    case ErrorCode::NoRealRoot: return "NoRealRoot";
    case ErrorCode::MinimizerFailure: return "MinimizerFailure";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::SpecError: return "SpecError";
  }
  return "Unknown";
}

}  // namespace entdeg

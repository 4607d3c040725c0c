#include "reactsim/error.hpp"

namespace reactsim {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::EmptyTrace: return "EmptyTrace";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::InvalidBoundary: return "InvalidBoundary";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::CorruptTrace: return "CorruptTrace";
    case ErrorKind::BinningMismatch: return "BinningMismatch";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace reactsim

#include "hatsplit/errors.hpp"

namespace hatsplit {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::UnknownLetter: return "UnknownLetter";
    case ErrorCode::NotClosedPath: return "NotClosedPath";
    case ErrorCode::InvalidTarget: return "InvalidTarget";
    case ErrorCode::NonRoseTarget: return "NonRoseTarget";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::CycleComponent: return "CycleComponent";
    case ErrorCode::NotForest: return "NotForest";
    case ErrorCode::Degree2VertexPresent: return "Degree2VertexPresent";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::NotUnexposed: return "NotUnexposed";
    case ErrorCode::Case1HypothesisFails: return "Case1HypothesisFails";
    case ErrorCode::Case2HypothesisFails: return "Case2HypothesisFails";
    case ErrorCode::InvalidComplex: return "InvalidComplex";
    case ErrorCode::NonSimplicialAfterRetries: return "NonSimplicialAfterRetries";
    case ErrorCode::UnknownPreset: return "UnknownPreset";
    case ErrorCode::UnknownSimplex: return "UnknownSimplex";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::MissingMarks: return "MissingMarks";
    case ErrorCode::InvalidQuery: return "InvalidQuery";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace hatsplit

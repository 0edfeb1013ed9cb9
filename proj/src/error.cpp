#include "knotgame/error.hpp"

namespace knotgame {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::NotAShadow: return "NotAShadow";
    case ErrorCode::NotFullyResolved: return "NotFullyResolved";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::InternalNonConvergence: return "InternalNonConvergence";
    case ErrorCode::IllegalOutcomePair: return "IllegalOutcomePair";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::PositionTooLarge: return "PositionTooLarge";
    case ErrorCode::UnknownGame: return "UnknownGame";
    case ErrorCode::NotYourTurn: return "NotYourTurn";
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::GameOver: return "GameOver";
    case ErrorCode::VersionConflict: return "VersionConflict";
  }
  return "Unknown";
}

}  // namespace knotgame

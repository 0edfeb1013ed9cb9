#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace knotgame {

enum class ErrorCode {
  ParseError,
  InvalidInput,
  NotAKnot,
  NotAShadow,
  NotFullyResolved,
  PatternMismatch,
  InternalNonConvergence,
  IllegalOutcomePair,
  BudgetExceeded,
  PositionTooLarge,
  UnknownGame,
  NotYourTurn,
  IllegalMove,
  GameOver,
  VersionConflict,
};

/// Machine-readable name, used verbatim in HTTP error bodies.
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace knotgame

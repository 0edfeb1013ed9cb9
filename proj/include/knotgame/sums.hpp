#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "knotgame/rewrite.hpp"
#include "knotgame/solver.hpp"
#include "knotgame/tangle.hpp"

namespace knotgame {

enum class ClosedFormRationale { AllSummandsOddEvenReducible, SomeIrreducibleEvenParity, SomeIrreducibleOddParity };

std::string_view rationale_name(ClosedFormRationale r) noexcept;

struct ClosedFormOutcome {
  OutcomeClass outcome = OutcomeClass::U;
  ClosedFormRationale rationale = ClosedFormRationale::AllSummandsOddEvenReducible;
  /// Classification of each summand, in input order.
  std::vector<ShadowClass> summands;
};

/// Winner rule for a sum of rational knot shadows without any game-tree
/// search: U if every summand is odd-even reducible, otherwise the parity of
/// the total crossing count picks First (odd) or Second (even).
/// Throws Error{InvalidInput} on an empty sum, Error{NotAShadow}, Error{NotAKnot}.
ClosedFormOutcome outcome_closed_form(const SumPosition& shadows);

struct OracleReport {
  ClosedFormOutcome closed_form;
  OutcomeClass solver_outcome = OutcomeClass::U;
  bool agree = false;
};

/// Closed form next to the solver's answer. Throws Error{BudgetExceeded} if
/// the sum has more than `max_crossings` crossings.
OracleReport outcome_oracle_check(const SumPosition& shadows, std::int64_t max_crossings, const Solver& solver);

}  // namespace knotgame

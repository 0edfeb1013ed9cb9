#include "knotgame/sums.hpp"

#include <string>

#include "knotgame/error.hpp"

namespace knotgame {

std::string_view rationale_name(ClosedFormRationale r) noexcept {
  switch (r) {
    case ClosedFormRationale::AllSummandsOddEvenReducible: return "all-summands-odd-even-reducible";
    case ClosedFormRationale::SomeIrreducibleEvenParity: return "some-irreducible-even-parity";
    case ClosedFormRationale::SomeIrreducibleOddParity: return "some-irreducible-odd-parity";
  }
  return "?";
}

ClosedFormOutcome outcome_closed_form(const SumPosition& shadows) {
  if (shadows.size() == 0) throw Error(ErrorCode::InvalidInput, "a sum needs at least one summand");
  ClosedFormOutcome result;
  bool all_reducible = true;
  for (const auto& component : shadows.components()) {
    result.summands.push_back(classify_shadow(component));
    if (result.summands.back().kind != ShadowKind::OddEvenReducible) all_reducible = false;
  }
  if (all_reducible) {
    result.outcome = OutcomeClass::U;
    result.rationale = ClosedFormRationale::AllSummandsOddEvenReducible;
  } else if (shadows.parity() == 0) {
    result.outcome = OutcomeClass::Second;
    result.rationale = ClosedFormRationale::SomeIrreducibleEvenParity;
  } else {
    result.outcome = OutcomeClass::First;
    result.rationale = ClosedFormRationale::SomeIrreducibleOddParity;
  }
  return result;
}

OracleReport outcome_oracle_check(const SumPosition& shadows, std::int64_t max_crossings, const Solver& solver) {
  const auto crossings = shadows.unresolved_count();
  if (crossings > max_crossings) {
    throw Error(ErrorCode::BudgetExceeded, std::to_string(crossings) + " crossings exceed the budget of " +
                                               std::to_string(max_crossings));
  }
  OracleReport report;
  report.closed_form = outcome_closed_form(shadows);
  report.solver_outcome = solver.outcome(shadows);
  report.agree = report.closed_form.outcome == report.solver_outcome;
  return report;
}

}  // namespace knotgame

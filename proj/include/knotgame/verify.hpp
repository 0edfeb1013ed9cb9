#pragma once

#include <string>
#include <vector>

#include "knotgame/solver.hpp"

namespace knotgame {

/// One evaluateKnot(template) run from the original brute-force table: a shadow
/// given as a plain list of crossing counts and the printed winners.
struct GoldenEvaluation {
  std::vector<std::int64_t> shadow;
  Player winner_unknotter_first;
  Player winner_knotter_first;
};

/// The twelve published evaluations, in published order.
const std::vector<GoldenEvaluation>& golden_evaluations();

struct GoldenResult {
  GoldenEvaluation expected;
  Player unknotter_first;
  Player knotter_first;
  bool pass;
};

std::vector<GoldenResult> run_golden_evaluations(const Solver& solver);

/// "Ursula" / "Lear", the names the original output uses.
std::string_view golden_name(Player p) noexcept;

/// `evaluateKnot([3,1,3]): If Ursula goes first, the winner is Ursula; If Lear
/// goes first, the winner is Lear ... PASS`
std::string format_golden_result(const GoldenResult& r);

}  // namespace knotgame

#include "knotgame/verify.hpp"

namespace knotgame {

const std::vector<GoldenEvaluation>& golden_evaluations() {
  constexpr auto U = Player::Unknotter;
  constexpr auto K = Player::Knotter;
  static const std::vector<GoldenEvaluation> table = {
      {{3, 1, 3}, U, K},
      {{0, 1, 3, 1, 3}, K, U},
      {{2, 1, 2, 2}, U, K},
      {{0, 1, 2, 1, 2, 2}, K, U},
      {{2, 2, 1, 2}, U, K},
      {{0, 1, 2, 2, 1, 2}, K, U},
      {{2, 1, 1, 2}, K, U},
      {{0, 1, 2, 1, 1, 2}, U, K},
      {{2, 2, 1, 2, 2}, U, K},
      {{0, 1, 2, 2, 1, 2, 2}, K, U},
      {{2, 2}, K, U},
      {{0, 1, 2, 2}, U, K},
  };
  return table;
}

std::vector<GoldenResult> run_golden_evaluations(const Solver& solver) {
  std::vector<GoldenResult> out;
  for (const auto& g : golden_evaluations()) {
    const SumPosition position(RationalPseudodiagram::shadow(g.shadow));
    const auto u_first = solver.wins_moving_first(position, Player::Unknotter);
    const auto k_first = solver.wins_moving_first(position, Player::Knotter);
    out.push_back({g, u_first, k_first, u_first == g.winner_unknotter_first && k_first == g.winner_knotter_first});
  }
  return out;
}

std::string_view golden_name(Player p) noexcept { return p == Player::Unknotter ? "Ursula" : "Lear"; }

std::string format_golden_result(const GoldenResult& r) {
  std::string list = "[";
  for (std::size_t i = 0; i < r.expected.shadow.size(); ++i) {
    if (i > 0) list += ',';
    list += std::to_string(r.expected.shadow[i]);
  }
  list += ']';
  std::string line = "evaluateKnot(" + list + "): If Ursula goes first, the winner is " +
                     std::string(golden_name(r.unknotter_first)) + "; If Lear goes first, the winner is " +
                     std::string(golden_name(r.knotter_first));
  if (!r.pass) {
    line += " (expected " + std::string(golden_name(r.expected.winner_unknotter_first)) + "/" +
            std::string(golden_name(r.expected.winner_knotter_first)) + ")";
  }
  line += r.pass ? " ... PASS" : " ... FAIL";
  return line;
}

}  // namespace knotgame

#pragma once

#include "knotgame/solver.hpp"
#include "knotgame/tangle.hpp"
#include "oracles.hpp"

namespace testing_support {

inline oracle::Sum to_oracle(const knotgame::SumPosition& p) {
  oracle::Sum s;
  for (const auto& c : p.components()) {
    oracle::Diagram d;
    for (const auto& r : c.regions()) d.emplace_back(r.resolved, r.unresolved);
    s.push_back(std::move(d));
  }
  return s;
}

inline knotgame::Player oracle_winner(const knotgame::SumPosition& p, knotgame::Player mover) {
  auto s = to_oracle(p);
  return oracle::unknotter_wins(s, mover == knotgame::Player::Unknotter) ? knotgame::Player::Unknotter
                                                                          : knotgame::Player::Knotter;
}

}  // namespace testing_support

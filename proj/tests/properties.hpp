#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "knotgame/solver.hpp"
#include "knotgame/tangle.hpp"

namespace properties {

struct Result {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && checked > 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

/// Every knot shadow with 1..max_crossings crossings and at most
/// `max_regions` regions (entries may be 0), one orientation each.
std::vector<knotgame::RationalPseudodiagram> knot_shadows(std::int64_t max_crossings, std::size_t max_regions);

/// Same as knot_shadows but keeping both orientations.
std::vector<knotgame::RationalPseudodiagram> oriented_knot_shadows(std::int64_t max_crossings,
                                                                   std::size_t max_regions);

/// Shadows plus every position reachable from the shadows of at most
/// `reachable_from` crossings.
std::vector<knotgame::SumPosition> positions(std::int64_t max_crossings, std::size_t max_regions,
                                             std::int64_t reachable_from);

Result six_irreducible_shadows(const knotgame::Solver& solver);
Result odd_even_shadows_are_uu(const knotgame::Solver& solver, std::int64_t max_crossings, std::size_t max_regions);
/// classify_shadow against the solver on every bounded shadow: closed form
/// equals outcome and the kind matches (U,U) or (2,1).
Result classification_matches_solver(const knotgame::Solver& solver, std::size_t max_regions, std::int64_t max_entry,
                                     std::int64_t max_crossings);
Result sum_closed_form_matches_solver(const knotgame::Solver& solver, std::size_t max_regions, std::int64_t max_entry,
                                      std::int64_t max_crossings);
Result odd_even_sums_are_uu(const knotgame::Solver& solver, std::size_t max_regions, std::int64_t max_entry,
                            std::int64_t max_crossings);
Result zero_game_summation(const knotgame::Solver& solver, std::int64_t max_crossings, std::size_t max_regions);
Result double_star_invariance(const knotgame::Solver& solver, std::int64_t max_crossings, std::size_t max_regions);
Result star_implications(const knotgame::Solver& solver, std::int64_t max_crossings, std::size_t max_regions,
                         std::int64_t reachable_from);
Result two_loss_monotone(const knotgame::Solver& solver, std::int64_t max_crossings, std::size_t max_regions);
Result unwind_preserves_xy(const knotgame::Solver& solver, std::int64_t max_crossings, std::size_t max_regions);
Result equivalences_preserve_outcome(const knotgame::Solver& solver, std::int64_t max_crossings,
                                     std::size_t max_regions);
Result no_shadow_is_k(const knotgame::Solver& solver, std::int64_t max_crossings, std::size_t max_regions);
Result star_encodings_agree(const knotgame::Solver& solver, std::int64_t max_crossings, std::size_t max_regions);
Result reduce_reaches_unknot(std::int64_t max_crossings, std::size_t max_regions);
/// Memoized solver against the plain recursion on every position.
Result memo_matches_plain(const std::vector<knotgame::SumPosition>& positions);

}  // namespace properties

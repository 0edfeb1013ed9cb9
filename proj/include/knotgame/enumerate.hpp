#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "knotgame/tangle.hpp"

namespace knotgame {

struct ShadowBounds {
  std::size_t max_regions = 4;
  std::int64_t max_entry = 4;
  std::int64_t min_entry = 0;
  std::int64_t max_crossings = 9;
  std::int64_t min_crossings = 0;
  /// Keep only one orientation of each shadow (the lexicographically smaller).
  bool up_to_reversal = true;
};

/// Knot shadows [(b_1),...,(b_n)], 1 <= n <= max_regions, sorted.
std::vector<RationalPseudodiagram> enumerate_knot_shadows(const ShadowBounds& bounds);

/// Multisets of the given summands (each needs at least one crossing) with
/// 1 <= size and total crossings <= max_crossings. Summands are taken in
/// nondecreasing index order, so every multiset appears once.
std::vector<SumPosition> enumerate_sums(const std::vector<RationalPseudodiagram>& summands,
                                        std::int64_t max_crossings);

}  // namespace knotgame

#include "knotgame/enumerate.hpp"

#include <algorithm>
#include <functional>

namespace knotgame {

std::vector<RationalPseudodiagram> enumerate_knot_shadows(const ShadowBounds& bounds) {
  std::vector<RationalPseudodiagram> out;
  std::vector<std::int64_t> entries;
  std::function<void(std::int64_t)> extend = [&](std::int64_t total) {
    if (!entries.empty() && total >= bounds.min_crossings) {
      auto shadow = RationalPseudodiagram::shadow(entries);
      if (is_knot(shadow) && (!bounds.up_to_reversal || !(shadow.reversed() < shadow))) {
        out.push_back(std::move(shadow));
      }
    }
    if (entries.size() == bounds.max_regions) return;
    for (std::int64_t b = bounds.min_entry; b <= bounds.max_entry && total + b <= bounds.max_crossings; ++b) {
      entries.push_back(b);
      extend(total + b);
      entries.pop_back();
    }
  };
  extend(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SumPosition> enumerate_sums(const std::vector<RationalPseudodiagram>& summands,
                                        std::int64_t max_crossings) {
  std::vector<SumPosition> out;
  std::vector<RationalPseudodiagram> chosen;
  std::function<void(std::size_t, std::int64_t)> extend = [&](std::size_t start, std::int64_t total) {
    if (!chosen.empty()) out.emplace_back(chosen);
    for (std::size_t i = start; i < summands.size(); ++i) {
      const auto c = summands[i].unresolved_count();
      if (c < 1 || total + c > max_crossings) continue;
      chosen.push_back(summands[i]);
      extend(i, total + c);
      chosen.pop_back();
    }
  };
  extend(0, 0);
  return out;
}

}  // namespace knotgame

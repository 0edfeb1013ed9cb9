#include "knotgame/tangle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "knotgame/error.hpp"
#include "knotgame/notation.hpp"

namespace knotgame {

RationalPseudodiagram::RationalPseudodiagram(std::vector<TwistRegion> regions)
    : regions_(std::move(regions)) {
  for (const auto& r : regions_) {
    if (r.unresolved < 0) {
      throw Error(ErrorCode::InvalidInput, "unresolved crossing count must be nonnegative");
    }
  }
}

RationalPseudodiagram RationalPseudodiagram::shadow(std::initializer_list<std::int64_t> unresolved) {
  return shadow(std::span<const std::int64_t>(unresolved.begin(), unresolved.size()));
}

RationalPseudodiagram RationalPseudodiagram::shadow(std::span<const std::int64_t> unresolved) {
  std::vector<TwistRegion> regions;
  regions.reserve(unresolved.size());
  for (auto b : unresolved) regions.push_back({0, b});
  return RationalPseudodiagram(std::move(regions));
}

RationalPseudodiagram RationalPseudodiagram::resolved(std::initializer_list<std::int64_t> twists) {
  return resolved(std::span<const std::int64_t>(twists.begin(), twists.size()));
}

RationalPseudodiagram RationalPseudodiagram::resolved(std::span<const std::int64_t> twists) {
  std::vector<TwistRegion> regions;
  regions.reserve(twists.size());
  for (auto a : twists) regions.push_back({a, 0});
  return RationalPseudodiagram(std::move(regions));
}

bool RationalPseudodiagram::is_shadow() const noexcept {
  return std::all_of(regions_.begin(), regions_.end(), [](const TwistRegion& r) { return r.resolved == 0; });
}

bool RationalPseudodiagram::is_fully_resolved() const noexcept {
  return std::all_of(regions_.begin(), regions_.end(), [](const TwistRegion& r) { return r.is_resolved(); });
}

std::int64_t RationalPseudodiagram::unresolved_count() const noexcept {
  std::int64_t total = 0;
  for (const auto& r : regions_) total += r.unresolved;
  return total;
}

std::vector<std::int64_t> RationalPseudodiagram::resolved_twists() const {
  std::vector<std::int64_t> out;
  out.reserve(regions_.size());
  for (const auto& r : regions_) out.push_back(r.resolved);
  return out;
}

std::vector<std::int64_t> RationalPseudodiagram::closure_twists() const {
  std::vector<std::int64_t> out;
  out.reserve(regions_.size());
  for (const auto& r : regions_) out.push_back(r.closure_twists());
  return out;
}

RationalPseudodiagram RationalPseudodiagram::reversed() const {
  RationalPseudodiagram out = *this;
  std::reverse(out.regions_.begin(), out.regions_.end());
  return out;
}

RationalPseudodiagram RationalPseudodiagram::reversal_canonical() const {
  auto rev = reversed();
  return rev < *this ? rev : *this;
}

std::int64_t SumPosition::unresolved_count() const noexcept {
  std::int64_t total = 0;
  for (const auto& c : components_) total += c.unresolved_count();
  return total;
}

bool SumPosition::is_fully_resolved() const noexcept {
  return std::all_of(components_.begin(), components_.end(),
                     [](const RationalPseudodiagram& c) { return c.is_fully_resolved(); });
}

bool SumPosition::is_shadow() const noexcept {
  return std::all_of(components_.begin(), components_.end(),
                     [](const RationalPseudodiagram& c) { return c.is_shadow(); });
}

SumPosition SumPosition::operator+(const SumPosition& other) const {
  auto parts = components_;
  parts.insert(parts.end(), other.components_.begin(), other.components_.end());
  return SumPosition(std::move(parts));
}

SumPosition SumPosition::with(const RationalPseudodiagram& extra) const {
  auto parts = components_;
  parts.push_back(extra);
  return SumPosition(std::move(parts));
}

void SumPosition::require_knots() const {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (!is_knot(components_[i])) {
      throw Error(ErrorCode::NotAKnot, "component " + std::to_string(i) + " " +
                                           to_string(components_[i]) +
                                           " closes to a two-component link");
    }
  }
}

Fraction evaluate_fraction(std::span<const std::int64_t> twists) {
  BigInt num = 0;
  BigInt den = 1;
  for (auto k : twists) {
    num += den * k;
    std::swap(num, den);
  }
  // The last value written is den.
  return Fraction{std::move(den), std::move(num)};
}

Fraction evaluate_fraction(std::initializer_list<std::int64_t> twists) {
  return evaluate_fraction(std::span<const std::int64_t>(twists.begin(), twists.size()));
}

namespace {

// Parity of p only depends on the twists mod 2.
bool closure_numerator_is_odd(const RationalPseudodiagram& diagram) {
  unsigned num = 0;
  unsigned den = 1;
  for (const auto& r : diagram.regions()) {
    const unsigned k = static_cast<unsigned>(r.closure_twists() & 1);
    num = (num + den * k) & 1U;
    std::swap(num, den);
  }
  return den == 1U;
}

}  // namespace

bool is_knot(const RationalPseudodiagram& diagram) {
  return closure_numerator_is_odd(diagram);
}

bool resolved_twists_are_unknot(std::span<const std::int64_t> twists) {
  std::int64_t num = 0;
  std::int64_t den = 1;
  for (std::size_t i = 0; i < twists.size(); ++i) {
    std::int64_t prod = 0;
    std::int64_t next = 0;
    if (__builtin_mul_overflow(den, twists[i], &prod) || __builtin_add_overflow(num, prod, &next)) {
      const auto exact = evaluate_fraction(twists);
      return abs(exact.p) == 1;
    }
    num = den;
    den = next;
  }
  return den == 1 || den == -1;
}

bool is_unknot(const RationalPseudodiagram& diagram) {
  if (!diagram.is_fully_resolved()) {
    throw Error(ErrorCode::NotFullyResolved, to_string(diagram) + " still has unresolved crossings");
  }
  if (!is_knot(diagram)) {
    throw Error(ErrorCode::NotAKnot, to_string(diagram) + " closes to a two-component link");
  }
  const auto twists = diagram.resolved_twists();
  return resolved_twists_are_unknot(twists);
}

int parity(const RationalPseudodiagram& diagram) noexcept { return diagram.parity(); }
int parity(const SumPosition& position) noexcept { return position.parity(); }

std::vector<PositionOption> options(const SumPosition& position) {
  std::vector<PositionOption> out;
  for (const auto& move : legal_moves(position)) {
    out.push_back({move, apply_move(position, move)});
  }
  return out;
}

std::vector<MoveDescriptor> legal_moves(const SumPosition& position) {
  std::vector<MoveDescriptor> out;
  for (std::size_t c = 0; c < position.size(); ++c) {
    const auto& regions = position[c].regions();
    for (std::size_t i = 0; i < regions.size(); ++i) {
      if (regions[i].unresolved > 0) {
        out.push_back({c, i, Sign::Positive});
        out.push_back({c, i, Sign::Negative});
      }
    }
  }
  return out;
}

SumPosition apply_move(const SumPosition& position, const MoveDescriptor& move) {
  if (move.component >= position.size() || move.region >= position[move.component].size() ||
      position[move.component][move.region].unresolved == 0 ||
      (move.sign != Sign::Positive && move.sign != Sign::Negative)) {
    throw Error(ErrorCode::IllegalMove, "no unresolved crossing at " + to_string(move));
  }
  auto components = position.components();
  auto regions = components[move.component].regions();
  regions[move.region].resolved += static_cast<int>(move.sign);
  regions[move.region].unresolved -= 1;
  components[move.component] = RationalPseudodiagram(std::move(regions));
  return SumPosition(std::move(components));
}

bool has_knotted_resolved_component(const SumPosition& position) {
  for (const auto& c : position.components()) {
    if (c.is_fully_resolved()) {
      const auto twists = c.resolved_twists();
      if (!resolved_twists_are_unknot(twists)) return true;
    }
  }
  return false;
}

}  // namespace knotgame

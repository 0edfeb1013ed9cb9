#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotgame {

using BigInt = boost::multiprecision::cpp_int;

/// One twist site of a rational pseudodiagram: `resolved` signed twists that
/// are already fixed plus `unresolved` precrossings still to be played.
struct TwistRegion {
  std::int64_t resolved = 0;
  std::int64_t unresolved = 0;

  bool is_resolved() const noexcept { return unresolved == 0; }
  /// Twist count of the region regardless of crossing signs; decides the
  /// number of components of the closure.
  std::int64_t closure_twists() const noexcept { return resolved + unresolved; }

  auto operator<=>(const TwistRegion&) const = default;
};

/// Numerator closure of a rational tangle pseudodiagram [a_1(b_1),...,a_n(b_n)].
/// The empty region list is the trivial diagram (the unknot).
class RationalPseudodiagram {
 public:
  RationalPseudodiagram() = default;
  /// Throws Error{InvalidInput} if any region has a negative unresolved count.
  explicit RationalPseudodiagram(std::vector<TwistRegion> regions);

  /// Shadow [(b_1),...,(b_n)].
  static RationalPseudodiagram shadow(std::initializer_list<std::int64_t> unresolved);
  static RationalPseudodiagram shadow(std::span<const std::int64_t> unresolved);
  /// Fully resolved diagram [a_1,...,a_n].
  static RationalPseudodiagram resolved(std::initializer_list<std::int64_t> twists);
  static RationalPseudodiagram resolved(std::span<const std::int64_t> twists);

  const std::vector<TwistRegion>& regions() const noexcept { return regions_; }
  std::size_t size() const noexcept { return regions_.size(); }
  bool empty() const noexcept { return regions_.empty(); }
  const TwistRegion& operator[](std::size_t i) const { return regions_[i]; }

  bool is_shadow() const noexcept;
  bool is_fully_resolved() const noexcept;
  std::int64_t unresolved_count() const noexcept;
  int parity() const noexcept { return static_cast<int>(unresolved_count() % 2); }

  std::vector<std::int64_t> resolved_twists() const;
  /// [a_1+b_1, ..., a_n+b_n].
  std::vector<std::int64_t> closure_twists() const;

  RationalPseudodiagram reversed() const;
  /// The lexicographically smaller of this diagram and its reversal.
  RationalPseudodiagram reversal_canonical() const;

  auto operator<=>(const RationalPseudodiagram&) const = default;

 private:
  std::vector<TwistRegion> regions_;
};

/// Connected sum T_1 # ... # T_k. Component order is kept as given (moves
/// address components by index) but carries no meaning for outcomes.
class SumPosition {
 public:
  SumPosition() = default;
  explicit SumPosition(std::vector<RationalPseudodiagram> components)
      : components_(std::move(components)) {}
  SumPosition(RationalPseudodiagram single) {  // NOLINT(google-explicit-constructor)
    components_.push_back(std::move(single));
  }

  const std::vector<RationalPseudodiagram>& components() const noexcept { return components_; }
  std::size_t size() const noexcept { return components_.size(); }
  const RationalPseudodiagram& operator[](std::size_t i) const { return components_[i]; }

  std::int64_t unresolved_count() const noexcept;
  int parity() const noexcept { return static_cast<int>(unresolved_count() % 2); }
  bool is_fully_resolved() const noexcept;
  bool is_shadow() const noexcept;

  SumPosition operator+(const SumPosition& other) const;
  SumPosition with(const RationalPseudodiagram& extra) const;

  /// Throws Error{NotAKnot} naming the first component whose closure is a link.
  void require_knots() const;

  auto operator<=>(const SumPosition&) const = default;

 private:
  std::vector<RationalPseudodiagram> components_;
};

/// p/q as produced by the projective continued-fraction iteration. Not reduced:
/// the iteration is unimodular, so p and q are always coprime.
struct Fraction {
  BigInt p;
  BigInt q;

  bool operator==(const Fraction&) const = default;
};

/// Value of a_n + 1/(a_{n-1} + 1/(... + 1/a_1)) with a_1 innermost, computed as
/// (num, den) <- (0, 1); for each k: num += den*k, swap. Zero entries are fine.
/// The empty list yields p = 1, q = 0 (the trivial tangle).
Fraction evaluate_fraction(std::span<const std::int64_t> twists);
Fraction evaluate_fraction(std::initializer_list<std::int64_t> twists);

/// Closure is a one-component knot: p of the closure twists is odd.
bool is_knot(const RationalPseudodiagram& diagram);

/// Requires a fully resolved knot diagram (Error{NotFullyResolved} /
/// Error{NotAKnot} otherwise). True iff |p| == 1.
bool is_unknot(const RationalPseudodiagram& diagram);

/// |p| == 1 for a fully resolved twist list, without the precondition checks.
/// Uses 64-bit continuants and falls back to BigInt on overflow.
bool resolved_twists_are_unknot(std::span<const std::int64_t> twists);

int parity(const RationalPseudodiagram& diagram) noexcept;
int parity(const SumPosition& position) noexcept;

enum class Sign : int { Positive = 1, Negative = -1 };

/// A move resolves one crossing of region `region` in component `component`.
/// Crossings inside a region are interchangeable, so the region is the whole address.
struct MoveDescriptor {
  std::size_t component = 0;
  std::size_t region = 0;
  Sign sign = Sign::Positive;

  auto operator<=>(const MoveDescriptor&) const = default;
};

struct PositionOption {
  MoveDescriptor move;
  SumPosition successor;
};

/// All (move, successor) pairs in deterministic order: components, then
/// regions, then + before -.
std::vector<PositionOption> options(const SumPosition& position);
std::vector<MoveDescriptor> legal_moves(const SumPosition& position);

/// Throws Error{IllegalMove} if the move addresses no unresolved crossing.
SumPosition apply_move(const SumPosition& position, const MoveDescriptor& move);

/// A single component is fully resolved and knotted, so the sum can never be
/// the unknot.
bool has_knotted_resolved_component(const SumPosition& position);

}  // namespace knotgame

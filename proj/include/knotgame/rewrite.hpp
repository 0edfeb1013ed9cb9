#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "knotgame/tangle.hpp"

namespace knotgame {

/// Rewrite rules on rational shadows. Equivalences: OneCombL/R
/// [(1),(a),...] = [(a+1),...]; ZLossL/R strip a (0),(0) end pair; ZLossMid
/// merges the neighbours of an interior (0); Invert reverses. Pseudo-R1:
/// UnwindL/R delete a kink next to a (0) end region. Pseudo-R2: TwoLoss
/// removes two crossings of one region.
enum class RuleTag { OneCombL, OneCombR, ZLossL, ZLossMid, ZLossR, Invert, UnwindL, UnwindR, TwoLoss };

enum class RuleKind { Equivalence, PseudoR1, PseudoR2 };

RuleKind rule_kind(RuleTag tag) noexcept;
std::string_view rule_name(RuleTag tag) noexcept;

/// `site` is the 1-based position (a_1 .. a_n) of the region the rule acts on.
/// It selects the region for ZLossMid (the zero) and TwoLoss; for the end
/// rules and Invert it is informational.
struct RewriteRule {
  RuleTag tag = RuleTag::Invert;
  std::size_t site = 1;

  bool operator==(const RewriteRule&) const = default;
};

struct RewriteStep {
  RewriteRule rule;
  RationalPseudodiagram result;
};

using Trace = std::vector<RewriteStep>;

/// `rule@site: <diagram>`, one line per step.
std::string format_trace(const Trace& trace);

/// Throws Error{PatternMismatch} if the left-hand side does not match. All
/// rules except UnwindL/UnwindR require a shadow; the unwind rules only need
/// the (0) end region to be blank. UnwindL also deletes the lone kink of [(1)].
RationalPseudodiagram apply_rule(const RationalPseudodiagram& diagram, RewriteRule rule);

/// Exactly one end region odd and every other region even; a single odd
/// region qualifies. Throws Error{NotAShadow}.
bool is_odd_even(const RationalPseudodiagram& shadow);

/// Reduces a knot shadow to [] by pseudo-Reidemeister moves and equivalences.
/// Throws Error{NotAKnot}, Error{NotAShadow}.
Trace reduce_to_unknot(const RationalPseudodiagram& shadow);

enum class ShadowKind { OddEvenReducible, Irreducible21 };

struct ShadowClass {
  ShadowKind kind = ShadowKind::OddEvenReducible;
  Trace witness;
  /// Diagram the witness ends in (the input itself for an empty trace).
  RationalPseudodiagram terminal;
};

std::string_view shadow_kind_name(ShadowKind kind) noexcept;

/// Deterministic normalization: zeros, ones and unwinds to a fixpoint, then
/// odd-even test; otherwise TwoLoss reductions down to one of the six
/// irreducible (2,1) shadows. Throws Error{NotAKnot}, Error{NotAShadow},
/// Error{InternalNonConvergence}.
ShadowClass classify_shadow(const RationalPseudodiagram& shadow);

/// [(3),(1),(3)], [(2),(1),(2),(2)], [(2),(2),(1),(2)], [(2),(1),(1),(2)],
/// [(2),(2),(1),(2),(2)], [(2),(2)].
std::span<const RationalPseudodiagram> irreducible_shadows();

/// Member of the six up to reversal.
bool is_irreducible_shadow(const RationalPseudodiagram& shadow);

}  // namespace knotgame

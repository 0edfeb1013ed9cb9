#include <gtest/gtest.h>

#include "knotgame/error.hpp"
#include "knotgame/notation.hpp"
#include "knotgame/rewrite.hpp"
#include "knotgame/solver.hpp"
#include "properties.hpp"

using namespace knotgame;

namespace {

RationalPseudodiagram d(const char* text) { return parse_diagram(text); }

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidInput;
}

void expect_ok(const properties::Result& r) {
  EXPECT_GT(r.checked, 0u);
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
}

}  // namespace

TEST(ApplyRule, Examples) {
  EXPECT_EQ(apply_rule(d("[(1),(2)]"), {RuleTag::OneCombL, 1}), d("[(3)]"));
  EXPECT_EQ(apply_rule(d("[(2),(0),(1),(1),(2),(2)]"), {RuleTag::ZLossMid, 2}), d("[(3),(1),(2),(2)]"));
  EXPECT_EQ(apply_rule(d("[(0),(3),(2)]"), {RuleTag::UnwindL, 1}), d("[(0),(2),(2)]"));
}

TEST(ApplyRule, OtherShapes) {
  EXPECT_EQ(apply_rule(d("[(2),(1)]"), {RuleTag::OneCombR, 2}), d("[(3)]"));
  EXPECT_EQ(apply_rule(d("[(0),(0),(3)]"), {RuleTag::ZLossL, 1}), d("[(3)]"));
  EXPECT_EQ(apply_rule(d("[(3),(0),(0)]"), {RuleTag::ZLossR, 2}), d("[(3)]"));
  EXPECT_EQ(apply_rule(d("[(3),(1),(2)]"), {RuleTag::Invert, 1}), d("[(2),(1),(3)]"));
  EXPECT_EQ(apply_rule(d("[(2),(3),(0)]"), {RuleTag::UnwindR, 3}), d("[(2),(2),(0)]"));
  EXPECT_EQ(apply_rule(d("[(2),(4)]"), {RuleTag::TwoLoss, 2}), d("[(2),(2)]"));
  EXPECT_EQ(apply_rule(d("[(1)]"), {RuleTag::UnwindL, 1}), d("[]"));
}

TEST(ApplyRule, UnwindAcceptsResolvedRegionsAwayFromTheKink) {
  EXPECT_EQ(apply_rule(d("[(0),(2),1(2)]"), {RuleTag::UnwindL, 1}), d("[(0),(1),1(2)]"));
}

TEST(ApplyRule, Errors) {
  EXPECT_EQ(code_of([] { apply_rule(d("[(2),(2)]"), {RuleTag::OneCombL, 1}); }), ErrorCode::PatternMismatch);
  EXPECT_EQ(code_of([] { apply_rule(d("[(1),(2)]"), {RuleTag::TwoLoss, 1}); }), ErrorCode::PatternMismatch);
  EXPECT_EQ(code_of([] { apply_rule(d("[(2),(1),(2)]"), {RuleTag::ZLossMid, 2}); }), ErrorCode::PatternMismatch);
  EXPECT_EQ(code_of([] { apply_rule(d("[(3),(2)]"), {RuleTag::UnwindL, 1}); }), ErrorCode::PatternMismatch);
  EXPECT_EQ(code_of([] { apply_rule(d("[1(2),(2)]"), {RuleTag::TwoLoss, 2}); }), ErrorCode::NotAShadow);
}

TEST(RuleKinds, Tags) {
  EXPECT_EQ(rule_kind(RuleTag::Invert), RuleKind::Equivalence);
  EXPECT_EQ(rule_kind(RuleTag::UnwindR), RuleKind::PseudoR1);
  EXPECT_EQ(rule_kind(RuleTag::TwoLoss), RuleKind::PseudoR2);
  EXPECT_EQ(rule_name(RuleTag::ZLossMid), "ZLossMid");
}

TEST(OddEven, Examples) {
  EXPECT_TRUE(is_odd_even(d("[(2),(2),(1)]")));
  EXPECT_FALSE(is_odd_even(d("[(3),(1),(3)]")));
  EXPECT_TRUE(is_odd_even(d("[(1)]")));
  EXPECT_TRUE(is_odd_even(d("[(3)]")));
  EXPECT_FALSE(is_odd_even(d("[(2),(2)]")));
  EXPECT_EQ(code_of([] { is_odd_even(d("[1(2)]")); }), ErrorCode::NotAShadow);
}

TEST(OddEven, SingleOddRegionsAreUnknotterWins) {
  Solver solver;
  for (const char* t : {"[(1)]", "[(3)]", "[(5)]", "[(7)]"}) {
    EXPECT_EQ(solver.outcome(d(t)), OutcomeClass::U) << t;
  }
}

TEST(Reduce, Examples) {
  const auto one = reduce_to_unknot(d("[(1)]"));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(rule_kind(one[0].rule.tag), RuleKind::PseudoR1);
  EXPECT_TRUE(one[0].result.empty());

  const auto three = reduce_to_unknot(d("[(3)]"));
  ASSERT_EQ(three.size(), 2u);
  EXPECT_EQ(three[0].rule.tag, RuleTag::TwoLoss);
  EXPECT_EQ(three[0].result, d("[(1)]"));
  EXPECT_TRUE(three[1].result.empty());

  const auto trace = reduce_to_unknot(d("[(2),(1),(2),(2)]"));
  ASSERT_FALSE(trace.empty());
  EXPECT_TRUE(trace.back().result.empty());
  EXPECT_EQ(code_of([] { reduce_to_unknot(d("[(2)]")); }), ErrorCode::NotAKnot);
}

TEST(Reduce, TraceFormat) {
  EXPECT_EQ(format_trace(reduce_to_unknot(d("[(3)]"))), "TwoLoss@1: [(1)]\nUnwindL@1: []\n");
}

TEST(Reduce, EveryKnotShadowUpToTenCrossings) { expect_ok(properties::reduce_reaches_unknot(10, 10)); }

TEST(Classify, Examples) {
  EXPECT_EQ(classify_shadow(d("[(2),(2)]")).kind, ShadowKind::Irreducible21);
  EXPECT_EQ(classify_shadow(d("[(2),(2),(1)]")).kind, ShadowKind::OddEvenReducible);
  const auto c = classify_shadow(d("[(2),(1),(1),(1),(2)]"));
  EXPECT_EQ(c.kind, ShadowKind::Irreducible21);
  EXPECT_EQ(c.terminal, d("[(2),(2)]"));
  EXPECT_EQ(code_of([] { classify_shadow(d("[(2)]")); }), ErrorCode::NotAKnot);
  EXPECT_EQ(shadow_kind_name(ShadowKind::Irreducible21), "irreducible-(2,1)");
}

TEST(Classify, WitnessReplays) {
  for (const auto& s : properties::oriented_knot_shadows(8, 5)) {
    const auto c = classify_shadow(s);
    auto cur = s;
    for (const auto& step : c.witness) {
      cur = apply_rule(cur, step.rule);
      ASSERT_EQ(cur, step.result) << to_string(s);
    }
    EXPECT_EQ(cur, c.terminal);
    if (c.kind == ShadowKind::Irreducible21) {
      EXPECT_TRUE(is_irreducible_shadow(c.terminal)) << to_string(s);
    } else {
      EXPECT_TRUE(c.terminal.empty() || is_odd_even(c.terminal)) << to_string(s);
      for (const auto& step : c.witness) EXPECT_NE(step.rule.tag, RuleTag::TwoLoss) << to_string(s);
    }
  }
}

TEST(Classify, TheSixAreIrreducible) {
  ASSERT_EQ(irreducible_shadows().size(), 6u);
  for (const auto& s : irreducible_shadows()) {
    EXPECT_EQ(classify_shadow(s).kind, ShadowKind::Irreducible21);
    EXPECT_TRUE(is_irreducible_shadow(s.reversed()));
  }
}

TEST(Properties, EquivalencesPreserveOutcome) { expect_ok(properties::equivalences_preserve_outcome(Solver(), 8, 6)); }
TEST(Properties, TwoLossMonotone) { expect_ok(properties::two_loss_monotone(Solver(), 7, 5)); }
TEST(Properties, UnwindPreservesXY) { expect_ok(properties::unwind_preserves_xy(Solver(), 7, 5)); }
TEST(Properties, ClassificationMatchesSolver) {
  expect_ok(properties::classification_matches_solver(Solver(), 4, 4, 8));
}

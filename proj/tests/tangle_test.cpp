#include <random>

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "knotgame/error.hpp"
#include "knotgame/notation.hpp"
#include "knotgame/tangle.hpp"

using namespace knotgame;

namespace {

void expect_code(ErrorCode code, const auto& fn) {
  try {
    fn();
    FAIL() << "expected " << error_code_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Fraction, Examples) {
  EXPECT_EQ(evaluate_fraction({1}), (Fraction{1, 1}));
  EXPECT_EQ(evaluate_fraction({3, 1, 3}), (Fraction{15, 4}));
  EXPECT_EQ(evaluate_fraction({3, 1, 2, 2}), (Fraction{26, 11}));
  EXPECT_EQ(evaluate_fraction({}), (Fraction{1, 0}));
}

TEST(Fraction, TwoTwoMatchesOracle) {
  const auto f = evaluate_fraction({2, 2});
  EXPECT_EQ(f.p, oracle::continuant({2, 2}));
  EXPECT_EQ(f.p, 5);
}

TEST(Fraction, AgreesWithExactRationalOnRandomZeroFreeLists) {
  std::mt19937_64 rng(20261014);
  std::uniform_int_distribution<int> len(1, 12);
  std::uniform_int_distribution<std::int64_t> mag(1, 40);
  std::bernoulli_distribution neg(0.3);
  int checked = 0;
  while (checked < 1000) {
    std::vector<std::int64_t> a(len(rng));
    for (auto& x : a) x = neg(rng) ? -mag(rng) : mag(rng);
    const auto exact = oracle::continued_fraction(a);
    if (!exact) continue;
    const auto f = evaluate_fraction(a);
    ASSERT_NE(f.q, 0);
    EXPECT_EQ(f.p * exact->denominator(), exact->numerator() * f.q);
    EXPECT_EQ(f.p, oracle::continuant(a));
    ++checked;
  }
}

TEST(Fraction, ReversalKeepsNumerator) {
  std::vector<std::int64_t> a;
  for (int n = 0; n <= 5; ++n) {
    std::vector<int> idx(n, 0);
    while (true) {
      a.clear();
      for (int i : idx) a.push_back(i - 3);
      const auto rev = std::vector<std::int64_t>(a.rbegin(), a.rend());
      EXPECT_EQ(evaluate_fraction(a).p, evaluate_fraction(rev).p);
      int k = 0;
      while (k < n && ++idx[k] == 7) idx[k++] = 0;
      if (k == n) break;
    }
  }
}

TEST(Fraction, LargeEntriesUseBigIntegers) {
  std::vector<std::int64_t> a(60, 1'000'000'007);
  const auto f = evaluate_fraction(a);
  EXPECT_EQ(f.p, oracle::continuant(a));
  EXPECT_FALSE(resolved_twists_are_unknot(a));
}

TEST(Knot, Examples) {
  EXPECT_TRUE(is_knot(parse_diagram("[(3),(1),(3)]")));
  EXPECT_FALSE(is_knot(parse_diagram("[(2)]")));
  EXPECT_TRUE(is_knot(parse_diagram("[(2),(2)]")));
  EXPECT_TRUE(is_knot(RationalPseudodiagram()));
  EXPECT_FALSE(is_knot(parse_diagram("[(3),(1),(2),(2)]")));
}

TEST(Knot, ResolvingACrossingKeepsKnotness) {
  const std::vector<std::string> texts = {"[(3),(1),(3)]", "[(2),(2)]", "[1(2),(1),-1(3)]", "[(0),(1),(2),(2)]"};
  for (const auto& t : texts) {
    const SumPosition p = parse_diagram(t);
    ASSERT_TRUE(is_knot(p[0]));
    for (const auto& o : options(p)) EXPECT_TRUE(is_knot(o.successor[0])) << to_string(o.successor);
  }
}

TEST(Unknot, Examples) {
  EXPECT_TRUE(is_unknot(parse_diagram("[1]")));
  EXPECT_TRUE(is_unknot(RationalPseudodiagram()));
  EXPECT_FALSE(is_unknot(parse_diagram("[3]")));
  EXPECT_TRUE(is_unknot(parse_diagram("[1,-1,1]")));
  EXPECT_FALSE(is_unknot(parse_diagram("[3,1,3]")));
  expect_code(ErrorCode::NotFullyResolved, [] { is_unknot(parse_diagram("[(1)]")); });
  expect_code(ErrorCode::NotAKnot, [] { is_unknot(parse_diagram("[2]")); });
}

TEST(Unknot, AgreesWithOracleOnSmallLists) {
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> idx(n, 0);
    while (true) {
      std::vector<std::int64_t> a;
      for (int i : idx) a.push_back(i - 3);
      EXPECT_EQ(resolved_twists_are_unknot(a), oracle::unknot(a));
      int k = 0;
      while (k < n && ++idx[k] == 7) idx[k++] = 0;
      if (k == n) break;
    }
  }
}

TEST(Diagram, ValidationAndAccessors) {
  expect_code(ErrorCode::InvalidInput, [] { RationalPseudodiagram({TwistRegion{0, -1}}); });
  const auto d = parse_diagram("[1(2),(1),-1(3)]");
  EXPECT_EQ(d.unresolved_count(), 6);
  EXPECT_EQ(d.parity(), 0);
  EXPECT_FALSE(d.is_shadow());
  EXPECT_EQ(d.closure_twists(), (std::vector<std::int64_t>{3, 1, 2}));
  EXPECT_EQ(d.reversed(), parse_diagram("[-1(3),(1),1(2)]"));
  EXPECT_EQ(RationalPseudodiagram::shadow({3, 2}).reversal_canonical(), RationalPseudodiagram::shadow({2, 3}));
}

TEST(Moves, OrderAndApplication) {
  const SumPosition p = parse_position("[(3)]#[(2),(2)]");
  const auto moves = legal_moves(p);
  ASSERT_EQ(moves.size(), 6u);
  EXPECT_EQ(moves[0], (MoveDescriptor{0, 0, Sign::Positive}));
  EXPECT_EQ(moves[1], (MoveDescriptor{0, 0, Sign::Negative}));
  EXPECT_EQ(moves[5], (MoveDescriptor{1, 1, Sign::Negative}));
  EXPECT_EQ(apply_move(p, moves[0]), parse_position("[1(2)]#[(2),(2)]"));
  expect_code(ErrorCode::IllegalMove, [&] { apply_move(p, MoveDescriptor{2, 0, Sign::Positive}); });
  expect_code(ErrorCode::IllegalMove, [] { apply_move(parse_position("[3(0)]"), MoveDescriptor{0, 0, Sign::Positive}); });
}

TEST(Sum, RequireKnots) {
  expect_code(ErrorCode::NotAKnot, [] { parse_position("[(3)]#[(2)]").require_knots(); });
  EXPECT_NO_THROW(parse_position("[(3)]#[(2),(2)]").require_knots());
  EXPECT_TRUE(has_knotted_resolved_component(parse_position("[3]#[(1)]")));
  EXPECT_FALSE(has_knotted_resolved_component(parse_position("[1]#[(3)]")));
}

#include <gtest/gtest.h>

#include "knotgame/error.hpp"
#include "knotgame/notation.hpp"

using namespace knotgame;

TEST(Notation, ParsesRegionForms) {
  const auto d = parse_diagram(" [ 3 , (2) , -1(4), 0 ] ");
  ASSERT_EQ(d.size(), 4u);
  EXPECT_EQ(d[0], (TwistRegion{3, 0}));
  EXPECT_EQ(d[1], (TwistRegion{0, 2}));
  EXPECT_EQ(d[2], (TwistRegion{-1, 4}));
  EXPECT_EQ(d[3], (TwistRegion{0, 0}));
}

TEST(Notation, EmptyDiagram) {
  EXPECT_TRUE(parse_diagram("[]").empty());
  EXPECT_TRUE(parse_diagram("[~]").empty());
  EXPECT_EQ(to_string(RationalPseudodiagram()), "[]");
}

TEST(Notation, SumsRoundTrip) {
  for (const std::string t : {"[(3)]#[(2),(2)]", "[1(2),(1),-1(3)]", "[0,(1),(2),(2)]", "[]#[(1)]"}) {
    EXPECT_EQ(to_string(parse_position(t)), t);
  }
  EXPECT_EQ(to_string(parse_position("[ (3) ] # [(2), (2)]")), "[(3)]#[(2),(2)]");
}

TEST(Notation, Moves) {
  EXPECT_EQ(to_string(MoveDescriptor{1, 2, Sign::Negative}), "(1,2,-)");
}

TEST(Notation, RejectsMalformedInput) {
  for (const std::string t : {"", "[", "[(3)", "[(-1)]", "[3,]", "[(3)]#", "[(3)] x", "[a]", "[~3]",
                              "[99999999999999999999]"}) {
    try {
      parse_position(t);
      ADD_FAILURE() << "accepted " << t;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << t;
    }
  }
}

#include <gtest/gtest.h>

#include "approxroots/format.hpp"
#include "approxroots/parse.hpp"
#include "support.hpp"

using namespace approxroots;

TEST(ParseCurve, Examples) {
  const YPoly x = YPoly(XPoly::variable()), y = YPoly::variable();
  const YPoly fex = y.pow(4) - (x.pow(3) * y.pow(2)).scaled(Rational(2)) - (x.pow(5) * y).scaled(Rational(4)) + x.pow(6) - x.pow(7);
  EXPECT_EQ(parse_curve("Y^4 - 2*X^3*Y^2 - 4*X^5*Y + X^6 - X^7"), fex);
  EXPECT_EQ(parse_curve("Y^4-2X^3Y^2-4X^5Y+X^6-X^7"), fex);
  EXPECT_EQ(parse_curve("Y"), y);
  EXPECT_EQ(parse_curve("Y^2 - (1/1)*X^3"), parse_curve("Y^2-X^3"));
  EXPECT_EQ(parse_curve("  -(X - 1/2) ( Y + X )^2 "), -(x - YPoly(XPoly(Rational(1, 2)))) * (y + x).pow(2));
  EXPECT_EQ(parse_curve("X^2/4"), x.pow(2).scaled(Rational(1, 4)));
  EXPECT_EQ(parse_curve("2^3 X"), x.scaled(Rational(8)));
}

TEST(ParseCurve, SyntaxErrorsCarryOffsets) {
  auto offset_of = [](const std::string& s) -> long {
    try {
      parse_curve(s);
    } catch (const SyntaxError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  EXPECT_EQ(offset_of("Y^2 +"), 5);
  EXPECT_EQ(offset_of("Y + Z"), 4);
  EXPECT_EQ(offset_of("(Y + X"), 6);
  EXPECT_EQ(offset_of("Y ** 2"), 3);
  EXPECT_EQ(offset_of("Y^-1"), 2);
  EXPECT_EQ(offset_of("Y / X"), 4);
  EXPECT_EQ(offset_of("Y / 0"), 4);
  EXPECT_EQ(offset_of("1.5 Y"), 1);
}

TEST(ParseCurve, IrrationalLiterals) {
  EXPECT_THROW(parse_curve("Y^2 - X^(1/2)"), IrrationalLiteral);
  EXPECT_THROW(parse_curve("sqrt(2) Y"), IrrationalLiteral);
  EXPECT_THROW(parse_curve("Y - pi X"), IrrationalLiteral);
}

TEST(ParseParameterization, Forms) {
  const auto p = parse_parameterization(" 4 ; T^6 + T^7");
  EXPECT_EQ(p.n, 4);
  EXPECT_EQ(to_string(p.y, "T"), "T^6 + T^7");
  EXPECT_THROW(parse_parameterization("T^6"), SyntaxError);
  EXPECT_THROW(parse_parameterization("x; T^6"), SyntaxError);
  try {
    parse_parameterization("4; T + Y");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 7u);
  }
}

TEST(Format, PrintThenParseIsIdentity) {
  testing_support::Rng rng(71);
  for (int i = 0; i < 200; ++i) {
    const YPoly f = testing_support::random_monic(rng, static_cast<std::size_t>(testing_support::uniform(rng, 0, 6)), 5) -
                    YPoly::monomial(testing_support::random_xpoly(rng, 3), 1);
    const std::string text = to_string(f);
    EXPECT_EQ(parse_curve(text), f) << text;
    EXPECT_EQ(to_string(parse_curve(text)), text);
    const XPoly t = testing_support::random_xpoly(rng, 6);
    EXPECT_EQ(parse_univariate(to_string(t, "T")), t);
  }
}

TEST(Format, Canonical) {
  EXPECT_EQ(to_string(parse_curve("X^7 - X^6 + 4X^5Y + 2X^3Y^2 - Y^4")), "-Y^4 + 2*X^3*Y^2 + 4*X^5*Y - X^6 + X^7");
  EXPECT_EQ(to_string(YPoly()), "0");
  EXPECT_EQ(to_string(parse_curve("X/2")), "1/2*X");
}

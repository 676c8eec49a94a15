#include <gtest/gtest.h>

#include "pqfib/scalar.hpp"

using pqfib::Rational;

TEST(ParseRational, AcceptsIntegersAndFractions) {
  EXPECT_EQ(*pqfib::parse_rational("3"), Rational(3));
  EXPECT_EQ(*pqfib::parse_rational("-7/4"), Rational(-7) / 4);
  EXPECT_EQ(*pqfib::parse_rational("+6/8"), Rational(3) / 4);
  EXPECT_EQ(*pqfib::parse_rational("123456789012345678901234567890"),
            Rational(pqfib::BigInt("123456789012345678901234567890")));
}

TEST(ParseRational, RejectsMalformed) {
  for (const char* bad : {"", "1.5", "1/0", "a", "1/", "/2", "1//2", "--1", "1/-2", " 1", "1e3"}) {
    EXPECT_FALSE(pqfib::parse_rational(bad).has_value()) << bad;
  }
}

TEST(ParseDecimal, AcceptsDecimalsRejectsRationals) {
  EXPECT_DOUBLE_EQ(*pqfib::parse_decimal("1.5"), 1.5);
  EXPECT_DOUBLE_EQ(*pqfib::parse_decimal("-2"), -2.0);
  EXPECT_DOUBLE_EQ(*pqfib::parse_decimal("3e-2"), 0.03);
  EXPECT_FALSE(pqfib::parse_decimal("1/2").has_value());
  EXPECT_FALSE(pqfib::parse_decimal("1.5x").has_value());
  EXPECT_FALSE(pqfib::parse_decimal("").has_value());
  EXPECT_FALSE(pqfib::parse_decimal("inf").has_value());
}

TEST(Power, HandlesNegativeExponents) {
  EXPECT_EQ(pqfib::power(Rational(2), 10), Rational(1024));
  EXPECT_EQ(pqfib::power(Rational(2, 3), -3), Rational(27, 8));
  EXPECT_EQ(pqfib::power(Rational(-5), 0), Rational(1));
  EXPECT_DOUBLE_EQ(pqfib::power(2.0, -2), 0.25);
  EXPECT_EQ(pqfib::sign_power<Rational>(3), Rational(-1));
  EXPECT_EQ(pqfib::sign_power<Rational>(-4), Rational(1));
}

TEST(SquareRoot, ExactOnlyForPerfectSquares) {
  EXPECT_EQ(*pqfib::square_root(Rational(9, 4)), Rational(3, 2));
  EXPECT_FALSE(pqfib::square_root(Rational(2)).has_value());
  EXPECT_FALSE(pqfib::square_root(Rational(-4)).has_value());
  EXPECT_FALSE(pqfib::square_root(Rational(4, 3)).has_value());
  EXPECT_DOUBLE_EQ(*pqfib::square_root(2.0), std::sqrt(2.0));
  EXPECT_FALSE(pqfib::square_root(-1.0).has_value());
}

TEST(HighPrecision, CarriesAtLeast64Digits) {
  EXPECT_GE(std::numeric_limits<pqfib::HighPrecision>::digits10, 64);
  const pqfib::HighPrecision third = pqfib::HighPrecision(1) / 3;
  EXPECT_LT(abs(third * 3 - 1), pqfib::HighPrecision("1e-70"));
}

TEST(ToString, RoundTripsRationals) {
  EXPECT_EQ(pqfib::to_string(Rational(-7, 4)), "-7/4");
  EXPECT_EQ(pqfib::to_string(Rational(6)), "6");
}

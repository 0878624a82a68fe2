#include "parlab/exact.hpp"

#include <stdexcept>

#include "gtest/gtest.h"

namespace parlab {
namespace {

TEST(RationalTest, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_EQ(parse_rational("-.25"), Rational(-1, 4));
  EXPECT_EQ(parse_rational("12.50"), Rational(25, 2));
}

TEST(RationalTest, RejectsMalformedText) {
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.2.3"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1."), std::invalid_argument);
}

TEST(RationalTest, CanonicalRendering) {
  EXPECT_EQ(to_string(Rational(150, 64)), "75/32");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
  EXPECT_EQ(to_string(Rational(-1, 2)), "-1/2");
}

TEST(RationalTest, DecimalUsesFifteenSignificantDigits) {
  EXPECT_EQ(to_decimal(Rational(75, 32)), "2.34375");
  EXPECT_EQ(to_decimal(Rational(1, 3)), "0.333333333333333");
  EXPECT_EQ(to_decimal(Rational(2)), "2");
}

TEST(RationalTest, Powers) {
  EXPECT_EQ(pow(Rational(3, 4), 3), Rational(27, 64));
  EXPECT_EQ(pow(Rational(5), 0), Rational(1));
  EXPECT_EQ(pow(Integer(2), 40), Integer("1099511627776"));
}

TEST(ExactNumberTest, FieldArithmetic) {
  ExactNumber r2 = ExactNumber::sqrt2();
  EXPECT_EQ(r2 * r2, ExactNumber(2));
  ExactNumber x(Rational(1), Rational(1));
  EXPECT_EQ(x * x.conjugate(), ExactNumber(-1));
  EXPECT_EQ((x - 1) * (x - 1), ExactNumber(2));
  EXPECT_EQ(x / x, ExactNumber(1));
  EXPECT_EQ(ExactNumber(1) / x, ExactNumber(Rational(-1), Rational(1)));
  ExactNumber y(Rational(3, 2), Rational(-2, 7));
  EXPECT_EQ((y / x) * x, y);
  EXPECT_EQ(-y + y, ExactNumber(0));
}

TEST(ExactNumberTest, DivisionByZeroSignals) {
  EXPECT_THROW(ExactNumber(1) / ExactNumber(0), std::domain_error);
}

TEST(ExactNumberTest, RationalAccessorRequiresZeroSurd) {
  EXPECT_EQ(ExactNumber(Rational(5, 3)).rational(), Rational(5, 3));
  EXPECT_THROW(ExactNumber::sqrt2().rational(), std::domain_error);
  ExactNumber a(Rational(20), Rational(-14));
  EXPECT_TRUE((a + a.conjugate()).is_rational());
  EXPECT_EQ((a + a.conjugate()).rational(), Rational(40));
}

TEST(ExactNumberTest, SignIsExact) {
  EXPECT_EQ(ExactNumber(Rational(1), Rational(-1)).sign(), -1);
  // 3 - 2*sqrt2 is about 0.17.
  EXPECT_EQ(ExactNumber(Rational(3), Rational(-2)).sign(), 1);
  // 99/70 is just above sqrt2, 140/99 just below.
  EXPECT_EQ(ExactNumber(Rational(99, 70), Rational(-1)).sign(), 1);
  EXPECT_EQ(ExactNumber(Rational(140, 99), Rational(-1)).sign(), -1);
  EXPECT_EQ(ExactNumber(0).sign(), 0);
  EXPECT_EQ(ExactNumber(Rational(-3), Rational(2)).sign(), -1);
}

TEST(ExactNumberTest, Ordering) {
  ExactNumber r2 = ExactNumber::sqrt2();
  EXPECT_LT(ExactNumber(Rational(7, 5)), r2);
  EXPECT_GT(ExactNumber(Rational(3, 2)), r2);
  EXPECT_LT(-r2, ExactNumber(-1));
  EXPECT_EQ(ExactNumber(Rational(1), Rational(-1)).abs(), ExactNumber(Rational(-1), Rational(1)));
}

TEST(ExactNumberTest, PowerMatchesRepeatedProduct) {
  ExactNumber x(Rational(1), Rational(1));
  ExactNumber acc(1);
  for (unsigned k = 0; k <= 40; ++k) {
    EXPECT_EQ(x.pow(k), acc) << "k=" << k;
    acc *= x;
  }
  // (1 + sqrt2)^k + (1 - sqrt2)^k is an integer for every k.
  for (unsigned k = 0; k <= 32; ++k) EXPECT_TRUE((x.pow(k) + x.conjugate().pow(k)).is_rational());
}

TEST(ExactNumberTest, Rendering) {
  EXPECT_EQ(ExactNumber(Rational(1, 2)).str(), "1/2");
  EXPECT_EQ(ExactNumber(Rational(3), Rational(-2)).str(), "3 - 2*sqrt2");
  EXPECT_EQ(ExactNumber::sqrt2().str(), "1*sqrt2");
  EXPECT_EQ(ExactNumber::sqrt2().decimal(), "1.4142135623731");
  EXPECT_NEAR(ExactNumber(Rational(1), Rational(1)).to_double(), 2.414213562373095, 1e-12);
}

}  // namespace
}  // namespace parlab

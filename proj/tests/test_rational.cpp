#include <tqft/rational.hpp>

#include <gtest/gtest.h>

namespace {

using tqft::Scalar;

TEST(Rational, CanonicalForm) {
  Scalar x(6, 4);
  EXPECT_EQ(tqft::numerator(x), 3);
  EXPECT_EQ(tqft::denominator(x), 2);
  Scalar y = Scalar(3) / Scalar(-6);
  EXPECT_EQ(tqft::numerator(y), -1);
  EXPECT_EQ(tqft::denominator(y), 2);
  EXPECT_EQ(tqft::parse_scalar("3/-6"), y);
  EXPECT_EQ(Scalar(2, 4) + Scalar(1, 4), Scalar(3, 4));
  EXPECT_EQ(Scalar(1, 3) * Scalar(3, 1), Scalar(1));
}

TEST(Rational, Arithmetic) {
  Scalar x = Scalar(1, 3) - Scalar(1, 2);
  EXPECT_EQ(x, Scalar(-1, 6));
  EXPECT_EQ(x / Scalar(-1, 6), Scalar(1));
  EXPECT_EQ(tqft::sign(x), -1);
  EXPECT_TRUE((x - x).is_zero());
}

TEST(Rational, PrintParseRoundTrip) {
  for (const Scalar& x : {Scalar(0), Scalar(7), Scalar(-7), Scalar(22, 7), Scalar(-3, 2)}) {
    EXPECT_EQ(tqft::parse_scalar(tqft::to_string(x)), x);
  }
  EXPECT_EQ(tqft::to_string(Scalar(-3, 2)), "-3/2");
  EXPECT_EQ(tqft::to_string(Scalar(5)), "5");
  EXPECT_EQ(tqft::parse_scalar("6/4"), Scalar(3, 2));
  EXPECT_EQ(tqft::parse_scalar("-0"), Scalar(0));
}

TEST(Rational, ParseErrors) {
  EXPECT_THROW(tqft::parse_scalar(""), tqft::input_error);
  EXPECT_THROW(tqft::parse_scalar("1/0"), tqft::input_error);
  EXPECT_THROW(tqft::parse_scalar("a/b"), tqft::input_error);
  EXPECT_THROW(tqft::parse_scalar("1/"), tqft::input_error);
  EXPECT_THROW(tqft::parse_scalar("/2"), tqft::input_error);
  EXPECT_THROW(tqft::parse_scalar("1.5"), tqft::input_error);
}

}  // namespace

// Copyright 2026 The numview Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "numview/rational.h"

#include <gtest/gtest.h>

#include "numview/error.h"

namespace numview {
namespace {

TEST(RationalTest, LowestTerms) {
  const Rational r(BigInt(6), BigInt(-8));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(r, Rational::Parse("-0.75"));
}

TEST(RationalTest, ParseForms) {
  EXPECT_EQ(Rational::Parse("12"), Rational(12));
  EXPECT_EQ(Rational::Parse("-3.25"), Rational(BigInt(-13), BigInt(4)));
  EXPECT_EQ(Rational::Parse(".5"), Rational(BigInt(1), BigInt(2)));
  EXPECT_EQ(Rational::Parse("2/6"), Rational(BigInt(1), BigInt(3)));
  EXPECT_EQ(Rational::Parse("0.34").ToString(), "0.34");
  EXPECT_EQ(Rational::Parse("008"), Rational(8));
  EXPECT_THROW(Rational::Parse("1.2.3"), Error);
  EXPECT_THROW(Rational::Parse(""), Error);
  EXPECT_THROW(Rational::Parse("1/0"), Error);
}

TEST(RationalTest, DecimalRendering) {
  EXPECT_EQ(Rational::Parse("2.50").ToString(), "2.5");
  EXPECT_EQ(Rational::Parse("-3").ToString(), "-3");
  EXPECT_EQ(Rational::Parse("0.05").ToString(), "0.05");
  EXPECT_EQ(Rational(BigInt(1), BigInt(3)).ToString(), "1/3");
  EXPECT_FALSE(Rational(BigInt(1), BigInt(3)).ToDecimal().has_value());
  EXPECT_EQ(Rational::Parse("0.25").DecimalDigitCount(), 3);
  EXPECT_EQ(Rational::Parse("123.45").DecimalScale(), 2);
  EXPECT_THROW(Rational(BigInt(2), BigInt(3)).DecimalScale(), Error);
}

TEST(RationalTest, Terminating) {
  EXPECT_TRUE(Rational(BigInt(7), BigInt(40)).is_terminating());
  EXPECT_FALSE(Rational(BigInt(1), BigInt(12)).is_terminating());
  EXPECT_EQ(StripTwosAndFives(BigInt(120)), 3);
}

TEST(RationalTest, ArithmeticAndOrder) {
  const Rational a = Rational::Parse("1.2");
  const Rational b = Rational::Parse("3.4");
  EXPECT_EQ((a * b).ToString(), "4.08");
  EXPECT_EQ((b - a).ToString(), "2.2");
  EXPECT_LT(a, b);
  EXPECT_THROW(a / Rational(0), Error);
  EXPECT_EQ(Rational::Pow10(-2), Rational::Parse("0.01"));
}

TEST(ParseDecimalDigitsTest, LeadingZerosStayDecimal) {
  EXPECT_EQ(ParseDecimalDigits("034"), 34);
  EXPECT_EQ(ParseDecimalDigits("08"), 8);
  EXPECT_EQ(ParseDecimalDigits("000"), 0);
  EXPECT_THROW(ParseDecimalDigits("0x1"), Error);
}

}  // namespace
}  // namespace numview

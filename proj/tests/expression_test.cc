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

#include "numview/expression.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "expression_gen.h"
#include "numview/error.h"
#include "rational_oracle.h"

namespace numview {
namespace {

std::string Exact(const Rational& r) {
  std::string s = r.numerator().str();
  if (r.denominator() != 1) s += "/" + r.denominator().str();
  return s;
}

Rational Eval(std::string_view text) { return Evaluate(ParseExpression(text)); }

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kUsage;
}

TEST(ParseExpressionTest, ProductOfSum) {
  const Expression e = ParseExpression("5*(2+3)");
  ASSERT_TRUE(e.is_binary());
  EXPECT_EQ(e.binary().op, BinaryOp::kMul);
  EXPECT_EQ(e.binary().lhs.literal().value(), Rational(5));
  EXPECT_EQ(e.binary().rhs.binary().op, BinaryOp::kAdd);
  EXPECT_EQ(e.ToString(), "(5*(2+3))");
}

TEST(ParseExpressionTest, SlotsArePreserved) {
  const Expression e = ParseExpression("( num2 / num1 )");
  ASSERT_TRUE(e.is_binary());
  EXPECT_EQ(e.binary().op, BinaryOp::kDiv);
  EXPECT_EQ(e.binary().lhs.slot(), 2);
  EXPECT_EQ(e.binary().rhs.slot(), 1);
  EXPECT_EQ(e.Slots(), (std::vector<int>{2, 1}));
}

TEST(ParseExpressionTest, Rejections) {
  EXPECT_EQ(CodeOf([] { ParseExpression(""); }), ErrorCode::kSyntax);
  EXPECT_EQ(CodeOf([] { ParseExpression("   "); }), ErrorCode::kSyntax);
  EXPECT_EQ(CodeOf([] { ParseExpression("(1+2"); }), ErrorCode::kSyntax);
  EXPECT_EQ(CodeOf([] { ParseExpression("1+"); }), ErrorCode::kSyntax);
  EXPECT_EQ(CodeOf([] { ParseExpression("2^3"); }), ErrorCode::kSyntax);
  EXPECT_EQ(CodeOf([] { ParseExpression("num0+1"); }), ErrorCode::kSyntax);
  EXPECT_EQ(CodeOf([] { ParseExpression("num1+num2+num3+num4"); }),
            ErrorCode::kUnsupportedShape);
}

TEST(ParseExpressionTest, UnicodeGlyphs) {
  EXPECT_EQ(ParseExpression("6 \xC3\x97 (4 \xE2\x88\x92 1)").ToString(),
            "(6*(4-1))");
  EXPECT_EQ(ParseExpression("8 \xC3\xB7 2").ToString(), "(8/2)");
}

TEST(EvaluateTest, NestedQuotient) {
  // Four operators: built directly, since the parser stops at two.
  auto lit = [](int v) { return Expression::Literal(NumberLiteral::FromScaled(v, 0)); };
  const Expression e = Expression::Make(
      BinaryOp::kDiv,
      Expression::Make(BinaryOp::kSub, Expression::Make(BinaryOp::kMul, lit(6), lit(8)),
                       Expression::Make(BinaryOp::kMul, lit(3), lit(6))),
      Expression::Make(BinaryOp::kAdd, lit(6), lit(4)));
  EXPECT_EQ(Exact(Evaluate(e)), *oracle::Evaluate("((6*8)-(3*6))/(6+4)"));
  EXPECT_EQ(Evaluate(e), Rational(3));
  EXPECT_EQ(Exact(Eval("5*(2+3)")), *oracle::Evaluate("5*(2+3)"));
}

TEST(EvaluateTest, ZeroDivisorAndUnboundSlot) {
  EXPECT_EQ(CodeOf([] { Eval("7/0"); }), ErrorCode::kZeroDivisor);
  EXPECT_EQ(CodeOf([] { Eval("7/(2-2)"); }), ErrorCode::kZeroDivisor);
  EXPECT_EQ(CodeOf([] { Evaluate(ParseExpression("num1+num2")); }),
            ErrorCode::kUnboundSlot);
}

TEST(EvaluateTest, IgnoresLiteralStyle) {
  const Expression e = ParseExpression("num1*num2");
  const std::vector<NumberLiteral> plain = {ParseNumber("1200"), ParseNumber("3")};
  const std::vector<NumberLiteral> styled = {
      ParseNumber("1,200"), ParseNumber("3").WithStyle(NumberStyle::kWords)};
  EXPECT_EQ(Evaluate(e, plain), Evaluate(e, styled));
  EXPECT_EQ(e.Bind(plain), e.Bind(styled));
}

TEST(CanonicalizeTest, CommutativeOperandsSorted) {
  EXPECT_EQ(Canonicalize(ParseExpression("(3+2)*5")),
            Canonicalize(ParseExpression("5*(2+3)")));
  EXPECT_NE(Canonicalize(ParseExpression("9-5")),
            Canonicalize(ParseExpression("5-9")));
  EXPECT_NE(Canonicalize(ParseExpression("8/2")),
            Canonicalize(ParseExpression("2/8")));
}

TEST(CanonicalizeTest, Idempotent) {
  for (const char* text : {"5*(2+3)", "(1.5+0.5)*(2)", "9-(4+1)", "7", "(2*3)/5", "4+(3+1)"}) {
    const Expression once = Canonicalize(ParseExpression(text));
    EXPECT_EQ(Canonicalize(once), once) << text;
  }
}

TEST(CommutedVariantsTest, AllSwaps) {
  std::set<std::string> got;
  for (const auto& v : CommutedVariants(ParseExpression("5*(2+3)"))) {
    got.insert(v.ToString());
  }
  EXPECT_EQ(got, (std::set<std::string>{"((2+3)*5)", "(5*(3+2))", "((3+2)*5)"}));
}

TEST(CommutedVariantsTest, NoneWithoutEffectiveSwap) {
  EXPECT_TRUE(CommutedVariants(ParseExpression("9-5")).empty());
  EXPECT_TRUE(CommutedVariants(ParseExpression("4+4")).empty());
}

TEST(OpSignatureTest, TaxonomyShapes) {
  const OperationSignature two = OpSignature(ParseExpression("(num1+num2)-num3"));
  EXPECT_EQ(two.shape, "(a+b)-c");
  EXPECT_EQ(two.hop_count, 2);
  const OperationSignature one = OpSignature(ParseExpression("num2/num1"));
  EXPECT_EQ(one.shape, "a/b");
  EXPECT_EQ(one.hop_count, 1);
  EXPECT_EQ(OpSignature(ParseExpression("( num3 +( num1*num2 ))")).shape, "(a*b)+c");
  EXPECT_EQ(OpSignature(ParseExpression("num1+num2*num3")).shape, "(a*b)+c");
  EXPECT_EQ(OpSignature(ParseExpression("(num1+num2)*num3")).shape, "a*(b+c)");
}

TEST(OpSignatureTest, Rejections) {
  EXPECT_EQ(CodeOf([] { OpSignature(ParseExpression("7")); }),
            ErrorCode::kUnsupportedShape);
  // c - (a+b) is not in the taxonomy, even up to commuting.
  EXPECT_EQ(CodeOf([] { OpSignature(ParseExpression("num3-(num1+num2)")); }),
            ErrorCode::kUnsupportedShape);
  EXPECT_EQ(CodeOf([] { ParseExpression("a+b+c+d"); }), ErrorCode::kSyntax);
  EXPECT_EQ(CodeOf([] { ParseExpression("1+2+3+4"); }),
            ErrorCode::kUnsupportedShape);
}

TEST(OpSignatureTest, EveryTemplateShapeMapsToItself) {
  EXPECT_EQ(TemplateShapes().size(), 20u);
  EXPECT_EQ(EvaluationShapes().size(), 9u);
  for (std::string_view shape : TemplateShapes()) {
    std::string text(shape);
    std::replace(text.begin(), text.end(), 'a', '1');
    std::replace(text.begin(), text.end(), 'b', '2');
    std::replace(text.begin(), text.end(), 'c', '3');
    EXPECT_EQ(OpSignature(ParseExpression(text)).shape, shape);
  }
  for (std::string_view shape : EvaluationShapes()) {
    EXPECT_NE(std::find(TemplateShapes().begin(), TemplateShapes().end(), shape),
              TemplateShapes().end());
  }
}

TEST(ExpressionPropertyTest, AgreesWithOracleAndInvariants) {
  std::mt19937_64 gen(20240601);
  int checked = 0;
  for (int i = 0; i < 4000; ++i) {
    const std::string_view shape = TemplateShapes()[i % TemplateShapes().size()];
    const std::string text = testing_support::RandomInstance(shape, gen);
    const std::optional<std::string> expected = oracle::Evaluate(text);
    const Expression e = ParseExpression(text);
    if (!expected) {
      EXPECT_EQ(CodeOf([&] { Evaluate(e); }), ErrorCode::kZeroDivisor) << text;
      continue;
    }
    const Rational value = Evaluate(e);
    ASSERT_EQ(Exact(value), *expected) << text;
    EXPECT_EQ(Evaluate(Canonicalize(e)), value) << text;
    for (const auto& v : CommutedVariants(e)) EXPECT_EQ(Evaluate(v), value);
    EXPECT_EQ(OpSignature(e).shape, shape) << text;
    ++checked;
  }
  EXPECT_GT(checked, 3000);
}

TEST(ExpressionPropertyTest, SignatureIgnoresBindings) {
  const Expression e = ParseExpression("num1*(num2-num3)");
  std::mt19937_64 gen(3);
  for (int i = 0; i < 50; ++i) {
    std::vector<NumberLiteral> values;
    for (int k = 0; k < 3; ++k) values.push_back(ParseNumber(testing_support::RandomLiteral(gen)));
    EXPECT_EQ(OpSignature(e.Bind(values)), OpSignature(e));
  }
}

}  // namespace
}  // namespace numview

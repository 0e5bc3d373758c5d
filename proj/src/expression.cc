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

#include <array>
#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>

#include "numview/error.h"

namespace numview {

struct SlotLeaf {
  int index;
};

struct Expression::Node {
  std::variant<NumberLiteral, SlotLeaf, BinaryNode> value;
};

char OpSymbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return '+';
    case BinaryOp::kSub: return '-';
    case BinaryOp::kMul: return '*';
    case BinaryOp::kDiv: return '/';
  }
  return '?';
}

Expression::Expression()
    : node_(std::make_shared<const Node>(Node{NumberLiteral()})) {}

Expression Expression::Literal(NumberLiteral literal) {
  return Expression(std::make_shared<const Node>(Node{std::move(literal)}));
}

Expression Expression::SlotRef(int index) {
  if (index < 1) {
    throw Error(ErrorCode::kSyntax, "slot index must be positive");
  }
  return Expression(std::make_shared<const Node>(Node{SlotLeaf{index}}));
}

Expression Expression::Make(BinaryOp op, Expression lhs, Expression rhs) {
  return Expression(std::make_shared<const Node>(
      Node{BinaryNode{op, std::move(lhs), std::move(rhs)}}));
}

bool Expression::is_literal() const {
  return std::holds_alternative<NumberLiteral>(node_->value);
}
bool Expression::is_slot() const {
  return std::holds_alternative<SlotLeaf>(node_->value);
}
bool Expression::is_binary() const {
  return std::holds_alternative<BinaryNode>(node_->value);
}
const NumberLiteral& Expression::literal() const {
  return std::get<NumberLiteral>(node_->value);
}
int Expression::slot() const { return std::get<SlotLeaf>(node_->value).index; }
const BinaryNode& Expression::binary() const {
  return std::get<BinaryNode>(node_->value);
}

int Expression::OperatorCount() const {
  if (!is_binary()) return 0;
  return 1 + binary().lhs.OperatorCount() + binary().rhs.OperatorCount();
}

bool Expression::HasSlots() const { return !Slots().empty(); }

std::vector<int> Expression::Slots() const {
  if (is_slot()) return {slot()};
  if (is_literal()) return {};
  std::vector<int> out = binary().lhs.Slots();
  for (int s : binary().rhs.Slots()) out.push_back(s);
  return out;
}

std::vector<NumberLiteral> Expression::Literals() const {
  if (is_literal()) return {literal()};
  if (is_slot()) return {};
  std::vector<NumberLiteral> out = binary().lhs.Literals();
  for (auto& lit : binary().rhs.Literals()) out.push_back(std::move(lit));
  return out;
}

std::vector<BinaryOp> Expression::Operators() const {
  if (!is_binary()) return {};
  std::vector<BinaryOp> out = binary().lhs.Operators();
  out.push_back(binary().op);
  for (BinaryOp op : binary().rhs.Operators()) out.push_back(op);
  return out;
}

Expression Expression::Bind(std::span<const NumberLiteral> bindings) const {
  if (is_literal()) return *this;
  if (is_slot()) {
    const int k = slot();
    if (k > static_cast<int>(bindings.size())) {
      throw Error(ErrorCode::kUnboundSlot,
                  "slot num" + std::to_string(k) + " is unbound");
    }
    return Literal(bindings[static_cast<size_t>(k - 1)]);
  }
  return Make(binary().op, binary().lhs.Bind(bindings),
              binary().rhs.Bind(bindings));
}

std::string Expression::ToString() const {
  if (is_literal()) return literal().value().ToString();
  if (is_slot()) return "num" + std::to_string(slot());
  std::string out = "(";
  out += binary().lhs.ToString();
  out += OpSymbol(binary().op);
  out += binary().rhs.ToString();
  out += ')';
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression Parse() {
    SkipSpace();
    if (pos_ >= text_.size()) Fail("empty expression");
    Expression e = ParseSum();
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void Fail(std::string_view why) const {
    throw Error(ErrorCode::kSyntax, std::string(why) + " at offset " +
                                        std::to_string(pos_) + " in '" +
                                        std::string(text_) + "'");
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool Match(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  std::optional<BinaryOp> MatchAdditive() {
    SkipSpace();
    if (Match("+")) return BinaryOp::kAdd;
    if (Match("-") || Match("\xE2\x88\x92")) return BinaryOp::kSub;
    return std::nullopt;
  }

  std::optional<BinaryOp> MatchMultiplicative() {
    SkipSpace();
    if (Match("*") || Match("\xC3\x97")) return BinaryOp::kMul;
    if (Match("/") || Match("\xC3\xB7")) return BinaryOp::kDiv;
    return std::nullopt;
  }

  Expression Combine(BinaryOp op, Expression lhs, Expression rhs) {
    if (++operators_ > kMaxHops) {
      throw Error(ErrorCode::kUnsupportedShape,
                  "more than " + std::to_string(kMaxHops) + " hops in '" +
                      std::string(text_) + "'");
    }
    return Expression::Make(op, std::move(lhs), std::move(rhs));
  }

  Expression ParseSum() {
    Expression lhs = ParseProduct();
    while (auto op = MatchAdditive()) {
      lhs = Combine(*op, std::move(lhs), ParseProduct());
    }
    return lhs;
  }

  Expression ParseProduct() {
    Expression lhs = ParseFactor();
    while (auto op = MatchMultiplicative()) {
      lhs = Combine(*op, std::move(lhs), ParseFactor());
    }
    return lhs;
  }

  Expression ParseFactor() {
    SkipSpace();
    if (pos_ >= text_.size()) Fail("operand expected");
    if (Match("(")) {
      Expression inner = ParseSum();
      SkipSpace();
      if (!Match(")")) Fail("')' expected");
      return inner;
    }
    if (Match("num")) {
      const size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      if (start == pos_) Fail("slot number expected");
      return Expression::SlotRef(std::stoi(std::string(text_.substr(start, pos_ - start))));
    }
    const size_t start = pos_;
    if (text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '-')) {
      pos_ = start;
      Fail("operand expected");
    }
    try {
      return Expression::Literal(ParseNumber(text_.substr(start, pos_ - start)));
    } catch (const Error&) {
      pos_ = start;
      Fail("malformed number");
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  int operators_ = 0;
};

Rational EvaluateNode(const Expression& e,
                      std::span<const NumberLiteral> bindings) {
  if (e.is_literal()) return e.literal().value();
  if (e.is_slot()) {
    const int k = e.slot();
    if (k > static_cast<int>(bindings.size())) {
      throw Error(ErrorCode::kUnboundSlot,
                  "slot num" + std::to_string(k) + " is unbound");
    }
    return bindings[static_cast<size_t>(k - 1)].value();
  }
  const BinaryNode& b = e.binary();
  Rational lhs = EvaluateNode(b.lhs, bindings);
  Rational rhs = EvaluateNode(b.rhs, bindings);
  switch (b.op) {
    case BinaryOp::kAdd: return lhs + rhs;
    case BinaryOp::kSub: return lhs - rhs;
    case BinaryOp::kMul: return lhs * rhs;
    case BinaryOp::kDiv:
      if (rhs.is_zero()) {
        throw Error(ErrorCode::kZeroDivisor,
                    "division by zero in " + e.ToString());
      }
      return lhs / rhs;
  }
  return lhs;
}

struct SortKey {
  std::optional<Rational> value;
  std::string text;
};

SortKey KeyOf(const Expression& e) {
  SortKey key{std::nullopt, e.ToString()};
  if (!e.HasSlots()) {
    try {
      key.value = Evaluate(e);
    } catch (const Error&) {
      key.value.reset();
    }
  }
  return key;
}

bool KeyLess(const SortKey& a, const SortKey& b) {
  if (a.value && b.value) {
    if (*a.value != *b.value) return *a.value < *b.value;
    return a.text < b.text;
  }
  if (a.value.has_value() != b.value.has_value()) return a.value.has_value();
  return a.text < b.text;
}

std::vector<Expression> AllSwaps(const Expression& e) {
  if (!e.is_binary()) return {e};
  const BinaryNode& b = e.binary();
  std::vector<Expression> out;
  for (const Expression& l : AllSwaps(b.lhs)) {
    for (const Expression& r : AllSwaps(b.rhs)) {
      out.push_back(Expression::Make(b.op, l, r));
      if (IsCommutative(b.op)) out.push_back(Expression::Make(b.op, r, l));
    }
  }
  return out;
}

// Shape text with leaves lettered in reading order; no outer parentheses.
std::string ShapeText(const Expression& e, char& next_letter, bool outer) {
  if (!e.is_binary()) return std::string(1, next_letter++);
  const BinaryNode& b = e.binary();
  std::string out = outer ? "" : "(";
  out += ShapeText(b.lhs, next_letter, false);
  out += OpSymbol(b.op);
  out += ShapeText(b.rhs, next_letter, false);
  if (!outer) out += ')';
  return out;
}

std::string ShapeText(const Expression& e) {
  char letter = 'a';
  return ShapeText(e, letter, true);
}

constexpr std::array<std::string_view, 9> kEvaluationShapes = {
    "a+b",     "a-b",     "a*b",     "a/b",    "(a+b)-c",
    "a*(b+c)", "(a+b)/c", "a*(b-c)", "(a-b)/c"};

constexpr std::array<std::string_view, 20> kTemplateShapes = {
    "a+b",     "a-b",     "a*b",     "a/b",     "(a+b)+c",
    "(a+b)-c", "a*(b+c)", "a*(b-c)", "(a+b)/c", "(a-b)/c",
    "(a-b)-c", "(a/b)+c", "(a*b)+c", "(a*b)-c", "(a*b)*c",
    "(a*b)/c", "a/(b+c)", "a/(b-c)", "a*(b/c)", "(a/b)*c"};

}  // namespace

Expression ParseExpression(std::string_view text) {
  return Parser(text).Parse();
}

Rational Evaluate(const Expression& expr,
                  std::span<const NumberLiteral> bindings) {
  return EvaluateNode(expr, bindings);
}

Expression Canonicalize(const Expression& expr) {
  if (!expr.is_binary()) return expr;
  const BinaryNode& b = expr.binary();
  Expression lhs = Canonicalize(b.lhs);
  Expression rhs = Canonicalize(b.rhs);
  if (IsCommutative(b.op) && KeyLess(KeyOf(rhs), KeyOf(lhs))) {
    std::swap(lhs, rhs);
  }
  return Expression::Make(b.op, std::move(lhs), std::move(rhs));
}

std::vector<Expression> CommutedVariants(const Expression& expr) {
  const std::string original = expr.ToString();
  std::set<std::string> seen = {original};
  std::vector<Expression> out;
  for (Expression& v : AllSwaps(expr)) {
    if (seen.insert(v.ToString()).second) out.push_back(std::move(v));
  }
  return out;
}

std::span<const std::string_view> EvaluationShapes() { return kEvaluationShapes; }
std::span<const std::string_view> TemplateShapes() { return kTemplateShapes; }

OperationSignature OpSignature(const Expression& expr) {
  const int hops = expr.OperatorCount();
  if (hops < 1 || hops > kMaxHops) {
    throw Error(ErrorCode::kUnsupportedShape,
                "expression " + expr.ToString() + " has " +
                    std::to_string(hops) + " operators");
  }
  const std::string exact = ShapeText(expr);
  for (std::string_view shape : kTemplateShapes) {
    if (shape == exact) return {exact, hops};
  }
  std::set<std::string> variants;
  for (const Expression& v : AllSwaps(expr)) variants.insert(ShapeText(v));
  for (std::string_view shape : kTemplateShapes) {
    if (variants.count(std::string(shape)) > 0) return {std::string(shape), hops};
  }
  throw Error(ErrorCode::kUnsupportedShape,
              "shape " + exact + " is outside the operation taxonomy");
}

}  // namespace numview

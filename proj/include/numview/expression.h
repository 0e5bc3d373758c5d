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

#ifndef NUMVIEW_EXPRESSION_H_
#define NUMVIEW_EXPRESSION_H_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "numview/number_forms.h"
#include "numview/rational.h"

namespace numview {

enum class BinaryOp { kAdd, kSub, kMul, kDiv };

char OpSymbol(BinaryOp op);
inline bool IsCommutative(BinaryOp op) {
  return op == BinaryOp::kAdd || op == BinaryOp::kMul;
}

inline constexpr int kMaxHops = 2;

struct BinaryNode;

// Immutable arithmetic tree over number literals and slot references
// (num1, num2, ...). Nodes are shared, so copies are cheap.
class Expression {
 public:
  // The literal 0.
  Expression();

  static Expression Literal(NumberLiteral literal);
  static Expression SlotRef(int index);
  static Expression Make(BinaryOp op, Expression lhs, Expression rhs);

  bool is_literal() const;
  bool is_slot() const;
  bool is_binary() const;
  const NumberLiteral& literal() const;
  int slot() const;  // 1-based
  const BinaryNode& binary() const;

  // Number of operator nodes, i.e. hops.
  int OperatorCount() const;
  bool HasSlots() const;
  // Slot indices in left-to-right leaf order.
  std::vector<int> Slots() const;
  // Literal leaves in left-to-right order.
  std::vector<NumberLiteral> Literals() const;
  std::vector<BinaryOp> Operators() const;

  // Replaces slot k by bindings[k - 1]. Throws kUnboundSlot.
  Expression Bind(std::span<const NumberLiteral> bindings) const;

  // Fully parenthesized infix with ASCII operators and no whitespace.
  // Literals are written as their exact minimal decimal value, so the text
  // does not depend on the literal's style.
  std::string ToString() const;

  friend bool operator==(const Expression& a, const Expression& b) {
    return a.ToString() == b.ToString();
  }

 private:
  struct Node;
  explicit Expression(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct BinaryNode {
  BinaryOp op;
  Expression lhs;
  Expression rhs;
};

// Accepts + - * / and the glyphs × ÷ −. Throws kSyntax on malformed or empty
// input and kUnsupportedShape when there are more than two operators.
Expression ParseExpression(std::string_view text);

// Exact value. Throws kUnboundSlot or kZeroDivisor.
Rational Evaluate(const Expression& expr,
                  std::span<const NumberLiteral> bindings = {});

// Sorts the operands of every + and × node by (value, text); unbound
// subtrees sort after bound ones. Idempotent.
Expression Canonicalize(const Expression& expr);

// Every distinct expression reachable by swapping operands of commutative
// nodes, excluding ones textually identical to `expr`.
std::vector<Expression> CommutedVariants(const Expression& expr);

struct OperationSignature {
  std::string shape;  // e.g. "(a+b)-c"
  int hop_count = 0;

  friend bool operator==(const OperationSignature&,
                         const OperationSignature&) = default;
};

// The nine evaluation-set shapes.
std::span<const std::string_view> EvaluationShapes();
// The twenty template shapes; a superset of the evaluation shapes.
std::span<const std::string_view> TemplateShapes();

// Shape of `expr` with leaves replaced by a, b, c in reading order, matched
// against the template taxonomy, first verbatim and then up to swaps of
// commutative operands. Throws kUnsupportedShape outside the taxonomy.
OperationSignature OpSignature(const Expression& expr);

}  // namespace numview

#endif  // NUMVIEW_EXPRESSION_H_

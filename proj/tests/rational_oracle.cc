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

#include "rational_oracle.h"

#include <gmpxx.h>

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <stack>
#include <vector>

namespace oracle {
namespace {

struct Token {
  enum Kind { kNumber, kOp, kOpen, kClose } kind;
  mpq_class value;
  char op = 0;
};

[[noreturn]] void Fail(std::string_view text, const char* why) {
  std::fprintf(stderr, "oracle cannot read '%.*s': %s\n",
               static_cast<int>(text.size()), text.data(), why);
  std::abort();
}

mpq_class ReadDecimal(std::string_view s) {
  std::string digits;
  size_t fraction_digits = 0;
  bool seen_point = false;
  for (char c : s) {
    if (c == '.') {
      seen_point = true;
    } else {
      digits += c;
      if (seen_point) ++fraction_digits;
    }
  }
  mpz_class numerator(digits, 10);
  mpz_class denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 10, fraction_digits);
  mpq_class q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> out;
  size_t i = 0;
  bool expect_operand = true;
  bool negate_next = false;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    char op = 0;
    size_t width = 1;
    if (c == '+' || c == '*' || c == '/' || c == '-') {
      op = static_cast<char>(c);
    } else if (text.substr(i, 2) == "\xC3\x97") {
      op = '*';
      width = 2;
    } else if (text.substr(i, 2) == "\xC3\xB7") {
      op = '/';
      width = 2;
    } else if (text.substr(i, 3) == "\xE2\x88\x92") {
      op = '-';
      width = 3;
    }
    if (op != 0) {
      if (expect_operand && op == '-') {
        negate_next = !negate_next;
      } else if (expect_operand) {
        Fail(text, "operator without left operand");
      } else {
        out.push_back({Token::kOp, 0, op});
        expect_operand = true;
      }
      i += width;
      continue;
    }
    if (c == '(') {
      if (negate_next) Fail(text, "negated group");
      out.push_back({Token::kOpen, 0, 0});
      ++i;
      continue;
    }
    if (c == ')') {
      out.push_back({Token::kClose, 0, 0});
      expect_operand = false;
      ++i;
      continue;
    }
    if (std::isdigit(c) || c == '.') {
      size_t j = i;
      while (j < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '.')) {
        ++j;
      }
      mpq_class v = ReadDecimal(text.substr(i, j - i));
      if (negate_next) v = -v;
      negate_next = false;
      out.push_back({Token::kNumber, v, 0});
      expect_operand = false;
      i = j;
      continue;
    }
    Fail(text, "unexpected character");
  }
  return out;
}

int Precedence(char op) { return op == '+' || op == '-' ? 1 : 2; }

}  // namespace

std::string Normalize(std::string_view numerator, std::string_view denominator) {
  mpq_class q(mpz_class(std::string(numerator), 10),
              mpz_class(std::string(denominator), 10));
  q.canonicalize();
  return q.get_str();
}

std::optional<std::string> Evaluate(std::string_view text) {
  std::vector<Token> postfix;
  std::stack<Token> ops;
  for (const Token& t : Tokenize(text)) {
    switch (t.kind) {
      case Token::kNumber:
        postfix.push_back(t);
        break;
      case Token::kOp:
        while (!ops.empty() && ops.top().kind == Token::kOp &&
               Precedence(ops.top().op) >= Precedence(t.op)) {
          postfix.push_back(ops.top());
          ops.pop();
        }
        ops.push(t);
        break;
      case Token::kOpen:
        ops.push(t);
        break;
      case Token::kClose:
        while (!ops.empty() && ops.top().kind != Token::kOpen) {
          postfix.push_back(ops.top());
          ops.pop();
        }
        if (ops.empty()) Fail(text, "unbalanced ')'");
        ops.pop();
        break;
    }
  }
  while (!ops.empty()) {
    if (ops.top().kind == Token::kOpen) Fail(text, "unbalanced '('");
    postfix.push_back(ops.top());
    ops.pop();
  }
  std::vector<mpq_class> stack;
  for (const Token& t : postfix) {
    if (t.kind == Token::kNumber) {
      stack.push_back(t.value);
      continue;
    }
    if (stack.size() < 2) Fail(text, "missing operand");
    mpq_class rhs = stack.back();
    stack.pop_back();
    mpq_class lhs = stack.back();
    stack.pop_back();
    switch (t.op) {
      case '+': stack.push_back(lhs + rhs); break;
      case '-': stack.push_back(lhs - rhs); break;
      case '*': stack.push_back(lhs * rhs); break;
      case '/':
        if (rhs == 0) return std::nullopt;
        stack.push_back(lhs / rhs);
        break;
    }
  }
  if (stack.size() != 1) Fail(text, "dangling operands");
  return stack.back().get_str();
}

}  // namespace oracle

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

#ifndef NUMVIEW_INSTANCE_H_
#define NUMVIEW_INSTANCE_H_

#include <string>
#include <vector>

#include "numview/expression.h"
#include "numview/number_forms.h"
#include "numview/rational.h"

namespace numview {

// A concrete question, either expanded from a seed or instantiated from a
// template. numbers[k - 1] binds slot k of `expression`; numbers the
// expression does not reference may follow.
struct Instance {
  std::string id;
  std::string seed_id;
  std::string aspect;
  std::string question;
  Expression expression;
  std::vector<NumberLiteral> numbers;
  Rational answer;
  OperationSignature signature;
  std::string template_id;
  std::string number_type;
  std::string prompt;

  Expression BoundExpression() const { return expression.Bind(numbers); }
  // Minimal exact decimal of the answer.
  std::string AnswerSurface() const { return answer.ToString(); }
};

// Why a seed/aspect pair or a template draw produced nothing.
struct SkipRecord {
  std::string source;  // seed id or template id
  std::string label;   // aspect name or number type
  std::string reason;

  friend bool operator==(const SkipRecord&, const SkipRecord&) = default;
};

}  // namespace numview

#endif  // NUMVIEW_INSTANCE_H_

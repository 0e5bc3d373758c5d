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

#ifndef NUMVIEW_SAMPLING_H_
#define NUMVIEW_SAMPLING_H_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "numview/expression.h"
#include "numview/number_forms.h"
#include "numview/rng.h"

namespace numview {

inline constexpr int kDefaultAttemptBudget = 100;

// Constraints every generated gold answer has to meet. Digits are counted
// on the minimal decimal rendering of the answer, sign and point excluded,
// so 0.25 has three.
struct AnswerConstraint {
  int max_digits = 12;
  bool require_terminating = true;
  bool require_nonnegative_answer = true;
  bool require_nonnegative_intermediates = true;
};

// Reason the bound expression violates `constraint`, or nullopt when it
// satisfies it. Division by zero is reported as a violation.
std::optional<std::string> CheckConstraint(const Expression& expr,
                                           std::span<const NumberLiteral> values,
                                           const AnswerConstraint& constraint);

using SampleFilter =
    std::function<std::optional<std::string>(std::span<const NumberLiteral>)>;

struct SampleResult {
  std::optional<std::vector<NumberLiteral>> values;
  int attempts = 0;
  std::string last_failure;
};

// Draws a value for every slot of `expr` from `spec`, repairing draws so
// that constraints are likely to hold:
//  - for each division, one slot of the dividend is drawn from the residue
//    class that makes the quotient a terminating decimal;
//  - operands of slot-minus-slot nodes are ordered larger first when
//    nonnegative results are required.
// Each attempt is then checked against `constraint` and `filter`. Gives up
// after `budget` attempts.
SampleResult SampleSlotValues(const Expression& expr, const NumberTypeSpec& spec,
                              const AnswerConstraint& constraint, Rng& rng,
                              const SampleFilter& filter = nullptr,
                              int budget = kDefaultAttemptBudget);

}  // namespace numview

#endif  // NUMVIEW_SAMPLING_H_

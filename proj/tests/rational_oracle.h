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

// Reference evaluator for bound arithmetic text. It shares no code with the
// library: tokens are read by hand, converted to postfix with the
// shunting-yard algorithm and evaluated with GMP rationals.

#ifndef NUMVIEW_TESTS_RATIONAL_ORACLE_H_
#define NUMVIEW_TESTS_RATIONAL_ORACLE_H_

#include <optional>
#include <string>
#include <string_view>

namespace oracle {

// Exact value as "p/q" in lowest terms ("p" when q is 1), or nullopt when a
// divisor is zero. Aborts the test binary on text it cannot read.
std::optional<std::string> Evaluate(std::string_view text);

// Same value written as the library prints rationals: "p/q" or "p".
std::string Normalize(std::string_view numerator, std::string_view denominator);

}  // namespace oracle

#endif  // NUMVIEW_TESTS_RATIONAL_ORACLE_H_

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

#ifndef NUMVIEW_DEPENDENCY_CLASSIFIER_H_
#define NUMVIEW_DEPENDENCY_CLASSIFIER_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "numview/expression.h"

namespace numview {

// How much of a test expression was seen in training. Later enumerators
// rank higher.
enum class DependencyClass {
  kUnseen,
  kOneOperation,
  kOneNumber,
  kNumberAndOperation,
  kAllNumbers,
  kExact,
};

inline constexpr int kDependencyClassCount = 6;

std::string_view DependencyClassName(DependencyClass c);
// Highest class first.
std::span<const DependencyClass> AllDependencyClasses();

// Class of a bound test expression against one bound training expression.
DependencyClass MatchLevel(const Expression& test, const Expression& train);

// Precomputed view of a training corpus.
class TrainingIndex {
 public:
  TrainingIndex() = default;
  explicit TrainingIndex(std::span<const Expression> corpus);

  void Add(const Expression& expr);
  size_t size() const { return size_; }

  // Best MatchLevel over the corpus, without scanning it.
  DependencyClass Classify(const Expression& test) const;
  // Class when numbers and operations may come from different training
  // expressions.
  DependencyClass ClassifyUnion(const Expression& test) const;

 private:
  size_t size_ = 0;
  std::unordered_set<std::string> canonical_;
  std::unordered_set<std::string> number_multisets_;
  // Number value -> set of operation masks of expressions containing it.
  std::unordered_map<std::string, std::uint32_t> ops_with_number_;
  std::unordered_set<std::string> numbers_;
  std::uint8_t all_ops_ = 0;
};

struct ClassTally {
  size_t total = 0;
  size_t correct = 0;
  size_t incorrect() const { return total - correct; }
  double ratio() const {
    return total == 0 ? 0.0 : static_cast<double>(correct) / total;
  }
};

// Per-class tallies indexed by DependencyClass. Throws kLengthMismatch when
// the spans differ in length.
std::array<ClassTally, kDependencyClassCount> Breakdown(
    std::span<const DependencyClass> classes, std::span<const bool> correct);

}  // namespace numview

#endif  // NUMVIEW_DEPENDENCY_CLASSIFIER_H_

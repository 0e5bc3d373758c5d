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

#include "numview/dependency_classifier.h"

#include <algorithm>

#include "numview/error.h"

namespace numview {
namespace {

std::uint8_t OpMask(const Expression& expr) {
  std::uint8_t mask = 0;
  for (BinaryOp op : expr.Operators()) mask |= 1u << static_cast<int>(op);
  return mask;
}

std::vector<std::string> NumberKeys(const Expression& expr) {
  std::vector<std::string> keys;
  for (const auto& lit : expr.Literals()) keys.push_back(lit.value().ToString());
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::string MultisetKey(const std::vector<std::string>& sorted_keys) {
  std::string key;
  for (const auto& k : sorted_keys) key.append(k).push_back('|');
  return key;
}

std::string CanonicalKey(const Expression& expr) {
  return Canonicalize(expr).ToString();
}

}  // namespace

std::string_view DependencyClassName(DependencyClass c) {
  switch (c) {
    case DependencyClass::kExact: return "exact";
    case DependencyClass::kAllNumbers: return "all_numbers";
    case DependencyClass::kNumberAndOperation: return "number_and_operation";
    case DependencyClass::kOneNumber: return "one_number";
    case DependencyClass::kOneOperation: return "one_operation";
    case DependencyClass::kUnseen: return "unseen";
  }
  return "unseen";
}

std::span<const DependencyClass> AllDependencyClasses() {
  static constexpr std::array<DependencyClass, kDependencyClassCount> kAll = {
      DependencyClass::kExact,         DependencyClass::kAllNumbers,
      DependencyClass::kNumberAndOperation, DependencyClass::kOneNumber,
      DependencyClass::kOneOperation,  DependencyClass::kUnseen};
  return kAll;
}

DependencyClass MatchLevel(const Expression& test, const Expression& train) {
  if (CanonicalKey(test) == CanonicalKey(train)) return DependencyClass::kExact;
  const auto test_numbers = NumberKeys(test);
  const auto train_numbers = NumberKeys(train);
  if (test_numbers == train_numbers) return DependencyClass::kAllNumbers;
  std::vector<std::string> shared;
  std::set_intersection(test_numbers.begin(), test_numbers.end(),
                        train_numbers.begin(), train_numbers.end(),
                        std::back_inserter(shared));
  const bool shares_op = (OpMask(test) & OpMask(train)) != 0;
  if (!shared.empty()) {
    return shares_op ? DependencyClass::kNumberAndOperation
                     : DependencyClass::kOneNumber;
  }
  return shares_op ? DependencyClass::kOneOperation : DependencyClass::kUnseen;
}

TrainingIndex::TrainingIndex(std::span<const Expression> corpus) {
  for (const auto& e : corpus) Add(e);
}

void TrainingIndex::Add(const Expression& expr) {
  ++size_;
  canonical_.insert(CanonicalKey(expr));
  const auto numbers = NumberKeys(expr);
  number_multisets_.insert(MultisetKey(numbers));
  const std::uint8_t mask = OpMask(expr);
  all_ops_ |= mask;
  for (const auto& n : numbers) {
    numbers_.insert(n);
    ops_with_number_[n] |= std::uint32_t{1} << mask;
  }
}

DependencyClass TrainingIndex::Classify(const Expression& test) const {
  if (size_ == 0) return DependencyClass::kUnseen;
  if (canonical_.contains(CanonicalKey(test))) return DependencyClass::kExact;
  const auto numbers = NumberKeys(test);
  if (number_multisets_.contains(MultisetKey(numbers))) {
    return DependencyClass::kAllNumbers;
  }
  const std::uint8_t mask = OpMask(test);
  bool shares_number = false;
  for (const auto& n : numbers) {
    auto it = ops_with_number_.find(n);
    if (it == ops_with_number_.end()) continue;
    shares_number = true;
    for (std::uint32_t m = 0; m < 16; ++m) {
      if ((it->second >> m & 1u) != 0 && (m & mask) != 0) {
        return DependencyClass::kNumberAndOperation;
      }
    }
  }
  if (shares_number) return DependencyClass::kOneNumber;
  if ((all_ops_ & mask) != 0) return DependencyClass::kOneOperation;
  return DependencyClass::kUnseen;
}

DependencyClass TrainingIndex::ClassifyUnion(const Expression& test) const {
  if (size_ == 0) return DependencyClass::kUnseen;
  if (canonical_.contains(CanonicalKey(test))) return DependencyClass::kExact;
  const auto numbers = NumberKeys(test);
  size_t seen = 0;
  for (const auto& n : numbers) seen += numbers_.contains(n) ? 1 : 0;
  const bool shares_op = (all_ops_ & OpMask(test)) != 0;
  if (!numbers.empty() && seen == numbers.size()) {
    return DependencyClass::kAllNumbers;
  }
  if (seen > 0) {
    return shares_op ? DependencyClass::kNumberAndOperation
                     : DependencyClass::kOneNumber;
  }
  return shares_op ? DependencyClass::kOneOperation : DependencyClass::kUnseen;
}

std::array<ClassTally, kDependencyClassCount> Breakdown(
    std::span<const DependencyClass> classes, std::span<const bool> correct) {
  if (classes.size() != correct.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(classes.size()) + " classes but " +
                    std::to_string(correct.size()) + " correctness flags");
  }
  std::array<ClassTally, kDependencyClassCount> out{};
  for (size_t i = 0; i < classes.size(); ++i) {
    ClassTally& t = out[static_cast<size_t>(classes[i])];
    ++t.total;
    if (correct[i]) ++t.correct;
  }
  return out;
}

}  // namespace numview

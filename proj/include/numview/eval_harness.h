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

#ifndef NUMVIEW_EVAL_HARNESS_H_
#define NUMVIEW_EVAL_HARNESS_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "numview/dataset_io.h"
#include "numview/dependency_classifier.h"
#include "numview/instance.h"
#include "numview/number_forms.h"

namespace numview {

enum class ExtractionStrategy { kFirstNumber, kLastNumber, kWholeOutput };

std::string_view StrategyName(ExtractionStrategy strategy);
// Throws kUsage for an unknown name.
ExtractionStrategy StrategyFromName(std::string_view name);

// A numeral found in free text. [begin, end) are byte offsets.
struct NumericToken {
  size_t begin = 0;
  size_t end = 0;
  NumberLiteral literal;
};

// Numeric tokens of `text` in order. A token is
//   [sign] (digits | digits-with-grouping | "") ["." digits]
// with at least one digit, where
//  - a sign counts only when not preceded by a letter or digit;
//  - grouping uses "," or " " between groups of exactly three digits after
//    a first group of one to three, one convention per token, and a
//    separator is taken only when three digits follow and no fourth;
//  - a point is taken only when a digit follows it, so a sentence-final
//    period is not part of the number.
// With `parse_words`, maximal runs of English cardinal words are tokens too.
std::vector<NumericToken> ScanNumbers(std::string_view text,
                                      bool parse_words = false);

std::optional<NumberLiteral> ExtractAnswer(std::string_view output,
                                           ExtractionStrategy strategy,
                                           bool parse_words = false);

// Exact value equality; formatting does not matter.
bool IsCorrect(const std::optional<NumberLiteral>& prediction,
               const Rational& gold);

// True when the values differ but their significant digits agree, as for
// 0.18 against 1.8.
bool DiagnoseMagnitude(const std::optional<NumberLiteral>& prediction,
                       const Rational& gold);

struct ScoreRow {
  std::string key;
  size_t total = 0;
  size_t correct = 0;
  size_t magnitude_errors = 0;

  double Accuracy() const;        // percent
  double MagnitudeRate() const;   // percent
};

struct ScoredItem {
  std::string id;
  std::string aspect;
  std::string signature;
  std::optional<std::string> extracted;
  bool correct = false;
  bool magnitude_error = false;
  std::optional<DependencyClass> dependency;
};

struct ScoreReport {
  ExtractionStrategy strategy = ExtractionStrategy::kLastNumber;
  std::vector<ScoredItem> items;              // suite order
  std::vector<ScoreRow> by_aspect;            // first appearance in suite
  std::vector<ScoreRow> by_signature;         // taxonomy order
  std::vector<ScoreRow> by_dependency;        // highest class first, if any
  ScoreRow overall;
};

struct ScoreOptions {
  ExtractionStrategy strategy = ExtractionStrategy::kLastNumber;
  bool parse_words = false;
  // Outputs that echo the wrapped question have the echo removed first.
  const PromptWrapper* prompt = nullptr;
  // Adds per-class rows when set.
  const TrainingIndex* training = nullptr;
  bool union_classes = false;
};

// Joins predictions to the suite by id. Throws kValidation naming the id for
// a missing, duplicate or unknown prediction.
ScoreReport ScoreFile(std::span<const Prediction> predictions,
                      std::span<const Instance> suite,
                      const ScoreOptions& options);

Json ReportToJson(const ScoreReport& report);
// Rows only; per-item results are not stored in the report file.
ScoreReport ReportFromJson(const Json& record);

// key,total,correct,accuracy,magnitude_errors,magnitude_rate
std::string RowsCsv(std::string_view key_header, std::span<const ScoreRow> rows);
// class,total,correct,incorrect,correct_ratio
std::string DependencyCsv(std::span<const ScoreRow> rows);
// Horizontal stacked bars of correct and incorrect counts per class.
std::string DependencyChartSvg(std::span<const ScoreRow> rows);

}  // namespace numview

#endif  // NUMVIEW_EVAL_HARNESS_H_

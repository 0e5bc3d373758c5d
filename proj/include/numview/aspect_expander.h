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

#ifndef NUMVIEW_ASPECT_EXPANDER_H_
#define NUMVIEW_ASPECT_EXPANDER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "numview/dataset_io.h"
#include "numview/expression.h"
#include "numview/instance.h"
#include "numview/number_forms.h"
#include "numview/sampling.h"

namespace numview {

// An annotated question. numbers[k - 1] is the k-th number in reading order
// and binds slot k; spans are byte ranges into `question`.
struct SeedInstance {
  std::string id;
  std::string question;
  std::vector<NumberLiteral> numbers;
  std::vector<std::pair<size_t, size_t>> spans;
  Expression expression;
  Rational answer;
  OperationSignature signature;
};

// Builds and validates a seed from {id, question, numbers: [{surface,
// span: [begin, end]}], expression, answer}. Spans count Unicode code
// points. Throws kValidation, kSchema, kSyntax or kUnsupportedShape.
SeedInstance SeedFromJson(const Json& record);

// Throws on the first invalid seed.
std::vector<SeedInstance> LoadSeeds(const std::string& path);

struct SeedCorpusReport {
  size_t total = 0;
  size_t one_hop = 0;
  size_t two_hop = 0;
  // Shape -> count for every evaluation shape, plus any other shape seen.
  std::map<std::string, size_t> by_shape;
  std::vector<std::string> errors;
};

// Validates every record and tallies operation signatures. Errors are
// collected rather than thrown; a corpus is valid when `errors` is empty.
SeedCorpusReport ValidateSeedCorpus(std::span<const JsonLine> records);
std::string FormatSeedReport(const SeedCorpusReport& report);

enum class AspectCategory {
  kOriginal,
  kSameNumberRepresentation,
  kMagnitudeVariant,
  kDigitGrouping,
  kRangeOfNumbers,
};

std::string_view CategoryName(AspectCategory category);
AspectCategory CategoryFromName(std::string_view name);

// Leaves the seed unchanged.
struct IdentityTransform {};
// Restyles every number that admits `style`; skips when none does.
struct StyleTransform {
  NumberStyle style;
};
// Swaps the values under the first commutative node, in pre-order, whose
// operands are two slots holding different values.
struct CommuteTransform {};
// Multiplies every number by 10^k.
struct ShiftTransform {
  int k;
};
// Moves the decimal point in front of each number's first digit, so 123
// becomes 0.123; numbers below one are left alone.
struct LeadingPointTransform {};
// Redraws every number from `type`. When `group_style` is set, numbers with
// at least five integer digits are then rendered in that grouping style.
struct ResampleTransform {
  NumberTypeSpec type;
  std::optional<NumberStyle> group_style;
};

using AspectTransform =
    std::variant<IdentityTransform, StyleTransform, CommuteTransform,
                 ShiftTransform, LeadingPointTransform, ResampleTransform>;

struct Aspect {
  std::string name;
  AspectCategory category = AspectCategory::kOriginal;
  AspectTransform transform;
  // Set for aspects that only apply to some seeds, so their size may fall
  // below the seed count.
  bool eligibility_restricted = false;
  // Published size of this aspect, reported next to the generated count.
  std::optional<size_t> reference_count;
};

// original plus the eighteen default aspects.
std::vector<Aspect> DefaultAspects();

// Reads a JSON array of {name, category, transform: {kind, ...},
// eligibility_restricted}. Throws kSchema.
std::vector<Aspect> AspectsFromJson(const Json& registry);
Json AspectsToJson(std::span<const Aspect> aspects);

using ExpandResult = std::variant<Instance, SkipRecord>;

// Applies one aspect to one seed with the generator for that pair.
ExpandResult ExpandInstance(const SeedInstance& seed, const Aspect& aspect,
                            Rng& rng, const AnswerConstraint& constraint = {});

// Generator used for a seed/aspect pair under `run_seed`. Aspects that
// resample from the same number type share a stream.
Rng AspectRng(std::uint64_t run_seed, const SeedInstance& seed,
              const Aspect& aspect);

struct EvalSuite {
  // Ordered by (seed id, aspect name).
  std::vector<Instance> instances;
  std::vector<SkipRecord> skips;
  // Registry order.
  std::vector<std::pair<std::string, size_t>> counts;
};

EvalSuite ExpandSuite(std::span<const SeedInstance> seeds,
                      std::span<const Aspect> aspects, std::uint64_t run_seed,
                      const AnswerConstraint& constraint = {});

}  // namespace numview

#endif  // NUMVIEW_ASPECT_EXPANDER_H_

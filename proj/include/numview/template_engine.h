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

#ifndef NUMVIEW_TEMPLATE_ENGINE_H_
#define NUMVIEW_TEMPLATE_ENGINE_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "numview/dataset_io.h"
#include "numview/expression.h"
#include "numview/instance.h"
#include "numview/number_forms.h"
#include "numview/rational.h"
#include "numview/rng.h"
#include "numview/sampling.h"

namespace numview {

enum class TemplateSource { kExpert, kGsm8k, kAqua };

std::string_view SourceName(TemplateSource source);
// Throws kSchema for an unknown name.
TemplateSource SourceFromName(std::string_view name);
std::span<const TemplateSource> AllSources();

inline constexpr int kMaxTemplateSlots = 3;

struct Template {
  std::string id;
  TemplateSource source = TemplateSource::kExpert;
  std::string text;
  Expression expression;
  OperationSignature signature;
};

// Validates placeholders against slots (same set, at most three) and the
// expression against the template shape taxonomy. Throws kValidation,
// kSyntax or kUnsupportedShape.
Template MakeTemplate(std::string id, TemplateSource source, std::string text,
                      std::string_view expression);

// Sorted slot indices named by numN placeholders in `text`.
std::vector<int> PlaceholderSlots(std::string_view text);

// Replaces each numN placeholder by the plain rendering of values[N - 1].
std::string FillPlaceholders(std::string_view text,
                             std::span<const NumberLiteral> values);

// Reads {id, source, text, expression} records. Errors carry the line.
std::vector<Template> LoadTemplates(const std::string& path);

struct TemplateInventory {
  size_t total = 0;
  std::map<TemplateSource, size_t> by_source;
  // Shape -> per-source counts, in taxonomy order when printed.
  std::map<std::string, std::map<TemplateSource, size_t>> by_shape;
};

TemplateInventory Inventory(std::span<const Template> templates);
std::string FormatInventory(const TemplateInventory& inventory);

// Binds every slot to a fresh draw from `spec`. Throws kInfeasible with the
// last failure reason when the attempt budget runs out.
Instance Instantiate(const Template& tmpl, const NumberTypeSpec& spec,
                     const AnswerConstraint& constraint, Rng& rng);

struct TypeShare {
  NumberTypeSpec type;
  Rational proportion;
};

// One block of a recipe: `total` instances split over number types, drawn
// from templates of the allowed sources.
struct RecipePart {
  std::string label;
  std::int64_t total = 0;
  std::vector<TypeShare> mix;
  std::vector<TemplateSource> sources;
};

struct Recipe {
  std::string name;
  std::vector<RecipePart> parts;

  std::int64_t TotalCount() const;
};

// base, base_scaled_up, base_diversified or dev. Throws kUsage otherwise.
Recipe PresetRecipe(std::string_view name);
// {name, parts: [{label, total, mix: [{type, proportion}], sources: [...]}]}
// Proportions are exact decimals or p/q strings. Throws kSchema.
Recipe RecipeFromJson(const Json& record);

struct BuiltDataset {
  std::vector<Instance> instances;
  std::vector<SkipRecord> skips;
};

// Exact per-type counts for every part; templates are visited round-robin
// in a per-stratum shuffled order, and a draw that cannot satisfy the
// constraint moves on to the next template. Throws kInfeasible when counts
// are not whole, proportions do not sum to one, or no template of the pool
// can be instantiated.
BuiltDataset BuildRecipe(const Recipe& recipe,
                         std::span<const Template> templates,
                         std::uint64_t seed,
                         const AnswerConstraint& constraint = {});

}  // namespace numview

#endif  // NUMVIEW_TEMPLATE_ENGINE_H_

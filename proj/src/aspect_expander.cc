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

#include "numview/aspect_expander.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "numview/error.h"

namespace numview {
namespace {

constexpr size_t kMinGroupedDigits = 5;

// Byte offset of every code point boundary in `text`, including the end.
std::vector<size_t> CodePointOffsets(std::string_view text) {
  std::vector<size_t> offsets;
  for (size_t i = 0; i < text.size(); ++i) {
    if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) offsets.push_back(i);
  }
  offsets.push_back(text.size());
  return offsets;
}

NumberLiteral ParseSurface(const std::string& surface) {
  try {
    return ParseNumber(surface);
  } catch (const Error&) {
    if (auto words = ParseWords(surface)) {
      return NumberLiteral::FromScaled(static_cast<std::int64_t>(*words), 0)
          .WithStyle(NumberStyle::kWords);
    }
    throw;
  }
}

std::string Rewrite(const SeedInstance& seed,
                    std::span<const NumberLiteral> numbers) {
  std::string out;
  size_t last = 0;
  for (size_t i = 0; i < seed.spans.size(); ++i) {
    out.append(seed.question, last, seed.spans[i].first - last);
    out += Render(numbers[i]);
    last = seed.spans[i].second;
  }
  out.append(seed.question, last);
  return out;
}

// `lit` restyled, or nullopt when the style does not apply or changes
// nothing.
std::optional<NumberLiteral> Restyle(const NumberLiteral& lit,
                                     NumberStyle style) {
  if (lit.style() == style) return std::nullopt;
  switch (style) {
    case NumberStyle::kTrailingZeroDecimal:
      return NumberLiteral(lit.sign(), lit.digits() + "0", lit.scale() + 1,
                           style);
    case NumberStyle::kCommaGrouped:
    case NumberStyle::kSpaceGrouped:
      if (lit.IntegerPart().size() < kMinGroupedDigits) return std::nullopt;
      break;
    default:
      break;
  }
  if (!lit.CanUseStyle(style)) return std::nullopt;
  return lit.WithStyle(style);
}

// First commutative node in pre-order with two distinct-valued slot leaves.
std::optional<std::pair<int, int>> CommutableSlots(
    const Expression& expr, std::span<const NumberLiteral> numbers) {
  if (!expr.is_binary()) return std::nullopt;
  const BinaryNode& node = expr.binary();
  if (IsCommutative(node.op) && node.lhs.is_slot() && node.rhs.is_slot() &&
      numbers[node.lhs.slot() - 1].value() !=
          numbers[node.rhs.slot() - 1].value()) {
    return std::make_pair(node.lhs.slot(), node.rhs.slot());
  }
  if (auto found = CommutableSlots(node.lhs, numbers)) return found;
  return CommutableSlots(node.rhs, numbers);
}

SkipRecord Skip(const SeedInstance& seed, const Aspect& aspect,
                std::string reason) {
  return SkipRecord{seed.id, aspect.name, std::move(reason)};
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// New numbers for the seed, or a skip reason.
std::variant<std::vector<NumberLiteral>, std::string> Transform(
    const SeedInstance& seed, const Aspect& aspect, Rng& rng,
    const AnswerConstraint& constraint) {
  using Result = std::variant<std::vector<NumberLiteral>, std::string>;
  std::vector<NumberLiteral> numbers = seed.numbers;
  return std::visit(
      Overloaded{
          [&](const IdentityTransform&) -> Result { return numbers; },
          [&](const StyleTransform& t) -> Result {
            bool changed = false;
            for (auto& n : numbers) {
              if (auto restyled = Restyle(n, t.style)) {
                n = *restyled;
                changed = true;
              }
            }
            if (!changed) {
              return "no number admits style " + std::string(StyleName(t.style));
            }
            return numbers;
          },
          [&](const CommuteTransform&) -> Result {
            const auto ops = seed.expression.Operators();
            if (std::none_of(ops.begin(), ops.end(), IsCommutative)) {
              return std::string("no commutative operation");
            }
            auto slots = CommutableSlots(seed.expression, numbers);
            if (!slots) return std::string("commuting operands is a no-op");
            std::swap(numbers[slots->first - 1], numbers[slots->second - 1]);
            return numbers;
          },
          [&](const ShiftTransform& t) -> Result {
            for (auto& n : numbers) n = ShiftMagnitude(n, t.k);
            return numbers;
          },
          [&](const LeadingPointTransform&) -> Result {
            bool changed = false;
            for (auto& n : numbers) {
              const std::string integer = n.IntegerPart();
              if (integer == "0") continue;
              n = ShiftMagnitude(n, -static_cast<int>(integer.size()));
              changed = true;
            }
            if (!changed) return std::string("every number is below one");
            return numbers;
          },
          [&](const ResampleTransform& t) -> Result {
            const size_t slot_count = [&] {
              const auto s = seed.expression.Slots();
              return s.empty() ? size_t{0}
                               : static_cast<size_t>(
                                     *std::max_element(s.begin(), s.end()));
            }();
            auto differs = [&](std::span<const NumberLiteral> values)
                -> std::optional<std::string> {
              std::vector<NumberLiteral> candidate = numbers;
              std::copy(values.begin(), values.end(), candidate.begin());
              if (Rewrite(seed, candidate) == seed.question) {
                return "resampled text identical to seed";
              }
              return std::nullopt;
            };
            SampleResult sample = SampleSlotValues(seed.expression, t.type,
                                                   constraint, rng, differs);
            if (!sample.values) {
              return sample.last_failure + " after " +
                     std::to_string(sample.attempts) + " attempts";
            }
            std::copy(sample.values->begin(), sample.values->end(),
                      numbers.begin());
            for (size_t i = slot_count; i < numbers.size(); ++i) {
              numbers[i] = GenNumber(t.type, rng);
            }
            if (t.group_style) {
              for (auto& n : numbers) {
                if (auto grouped = Restyle(n, *t.group_style)) n = *grouped;
              }
            }
            return numbers;
          },
      },
      aspect.transform);
}

NumberStyle RequireStyle(const Json& record, std::string_view key) {
  return StyleFromName(RequireString(record, key, "aspect transform"));
}

Json TransformToJson(const AspectTransform& transform) {
  Json out = Json::object();
  std::visit(Overloaded{
                 [&](const IdentityTransform&) { out["kind"] = "identity"; },
                 [&](const StyleTransform& t) {
                   out["kind"] = "style";
                   out["style"] = StyleName(t.style);
                 },
                 [&](const CommuteTransform&) { out["kind"] = "commute"; },
                 [&](const ShiftTransform& t) {
                   out["kind"] = "shift";
                   out["k"] = t.k;
                 },
                 [&](const LeadingPointTransform&) {
                   out["kind"] = "leading_point";
                 },
                 [&](const ResampleTransform& t) {
                   out["kind"] = "resample";
                   out["type"] = t.type.name();
                   if (t.group_style) out["group_style"] = StyleName(*t.group_style);
                 },
             },
             transform);
  return out;
}

AspectTransform TransformFromJson(const Json& record) {
  const std::string kind = RequireString(record, "kind", "aspect transform");
  if (kind == "identity") return IdentityTransform{};
  if (kind == "style") return StyleTransform{RequireStyle(record, "style")};
  if (kind == "commute") return CommuteTransform{};
  if (kind == "leading_point") return LeadingPointTransform{};
  if (kind == "shift") {
    const Json& k = RequireMember(record, "k", "aspect transform");
    if (!k.is_number_integer()) {
      throw Error(ErrorCode::kSchema, "aspect transform: 'k' must be an integer");
    }
    return ShiftTransform{k.get<int>()};
  }
  if (kind == "resample") {
    ResampleTransform t{NumberTypeSpec::FromName(
                            RequireString(record, "type", "aspect transform")),
                        std::nullopt};
    if (record.contains("group_style")) {
      t.group_style = RequireStyle(record, "group_style");
    }
    return t;
  }
  throw Error(ErrorCode::kSchema, "unknown aspect transform kind: " + kind);
}

}  // namespace

SeedInstance SeedFromJson(const Json& record) {
  SeedInstance seed;
  seed.id = RequireString(record, "id", "seed");
  const std::string context = "seed " + seed.id;
  seed.question = RequireString(record, "question", context);
  const std::vector<size_t> offsets = CodePointOffsets(seed.question);
  const Json& numbers = RequireMember(record, "numbers", context);
  if (!numbers.is_array()) {
    throw Error(ErrorCode::kSchema, context + ": 'numbers' not an array");
  }
  size_t previous_end = 0;
  for (const Json& n : numbers) {
    const std::string surface = RequireString(n, "surface", context);
    const Json& span = RequireMember(n, "span", context);
    if (!span.is_array() || span.size() != 2 || !span[0].is_number_integer() ||
        !span[1].is_number_integer() || span[0].get<std::int64_t>() < 0 ||
        span[1].get<std::int64_t>() < 0) {
      throw Error(ErrorCode::kSchema, context + ": span must be [begin, end]");
    }
    const auto begin = span[0].get<size_t>();
    const auto end = span[1].get<size_t>();
    if (begin >= end || end >= offsets.size()) {
      throw Error(ErrorCode::kValidation,
                  context + ": span of '" + surface + "' out of range");
    }
    const size_t byte_begin = offsets[begin];
    const size_t byte_end = offsets[end];
    if (byte_begin < previous_end) {
      throw Error(ErrorCode::kValidation,
                  context + ": numbers not in reading order");
    }
    if (seed.question.compare(byte_begin, byte_end - byte_begin, surface) != 0) {
      throw Error(ErrorCode::kValidation,
                  context + ": span does not cover '" + surface + "'");
    }
    seed.numbers.push_back(ParseSurface(surface));
    seed.spans.emplace_back(byte_begin, byte_end);
    previous_end = byte_end;
  }
  seed.expression = ParseExpression(RequireString(record, "expression", context));
  if (!seed.expression.HasSlots()) {
    throw Error(ErrorCode::kValidation, context + ": expression has no slots");
  }
  for (int slot : seed.expression.Slots()) {
    if (slot < 1 || static_cast<size_t>(slot) > seed.numbers.size()) {
      throw Error(ErrorCode::kValidation,
                  context + ": slot num" + std::to_string(slot) +
                      " has no aligned number");
    }
  }
  const Json& answer = RequireMember(record, "answer", context);
  if (!answer.is_string()) {
    throw Error(ErrorCode::kSchema, context + ": 'answer' must be a string");
  }
  seed.answer = Rational::Parse(answer.get<std::string>());
  const Rational computed = Evaluate(seed.expression, seed.numbers);
  if (computed != seed.answer) {
    throw Error(ErrorCode::kValidation,
                context + ": stored answer " + seed.answer.ToString() +
                    " but expression gives " + computed.ToString());
  }
  seed.signature = OpSignature(seed.expression);
  return seed;
}

std::vector<SeedInstance> LoadSeeds(const std::string& path) {
  std::vector<SeedInstance> seeds;
  std::set<std::string> ids;
  for (const auto& line : ReadJsonLines(path)) {
    try {
      seeds.push_back(SeedFromJson(line.value));
      if (!ids.insert(seeds.back().id).second) {
        throw Error(ErrorCode::kValidation, "duplicate seed id " + seeds.back().id);
      }
    } catch (const Error& e) {
      throw Error(e.code(), path + ":" + std::to_string(line.line_number) +
                                ": " + e.what());
    }
  }
  return seeds;
}

SeedCorpusReport ValidateSeedCorpus(std::span<const JsonLine> records) {
  SeedCorpusReport report;
  for (std::string_view shape : EvaluationShapes()) {
    report.by_shape[std::string(shape)] = 0;
  }
  std::set<std::string> ids;
  for (const auto& line : records) {
    try {
      SeedInstance seed = SeedFromJson(line.value);
      if (!ids.insert(seed.id).second) {
        throw Error(ErrorCode::kValidation, "duplicate seed id " + seed.id);
      }
      ++report.total;
      ++report.by_shape[seed.signature.shape];
      (seed.signature.hop_count == 1 ? report.one_hop : report.two_hop) += 1;
    } catch (const Error& e) {
      report.errors.push_back("line " + std::to_string(line.line_number) +
                              ": " + e.what());
    }
  }
  return report;
}

std::string FormatSeedReport(const SeedCorpusReport& report) {
  std::ostringstream out;
  out << "signature\tcount\n";
  std::set<std::string> printed;
  for (std::string_view shape : EvaluationShapes()) {
    out << shape << '\t' << report.by_shape.at(std::string(shape)) << '\n';
    printed.emplace(shape);
  }
  for (const auto& [shape, count] : report.by_shape) {
    if (!printed.contains(shape)) out << shape << '\t' << count << '\n';
  }
  out << "one-hop\t" << report.one_hop << '\n';
  out << "two-hop\t" << report.two_hop << '\n';
  out << "total\t" << report.total << '\n';
  out << "errors\t" << report.errors.size() << '\n';
  for (const auto& e : report.errors) out << "error: " << e << '\n';
  return out.str();
}

std::string_view CategoryName(AspectCategory category) {
  switch (category) {
    case AspectCategory::kOriginal: return "original";
    case AspectCategory::kSameNumberRepresentation: return "same_number_representation";
    case AspectCategory::kMagnitudeVariant: return "magnitude_variant";
    case AspectCategory::kDigitGrouping: return "digit_grouping";
    case AspectCategory::kRangeOfNumbers: return "range_of_numbers";
  }
  return "original";
}

AspectCategory CategoryFromName(std::string_view name) {
  for (auto c : {AspectCategory::kOriginal,
                 AspectCategory::kSameNumberRepresentation,
                 AspectCategory::kMagnitudeVariant, AspectCategory::kDigitGrouping,
                 AspectCategory::kRangeOfNumbers}) {
    if (CategoryName(c) == name) return c;
  }
  throw Error(ErrorCode::kSchema, "unknown aspect category: " + std::string(name));
}

std::vector<Aspect> DefaultAspects() {
  using C = AspectCategory;
  auto resample = [](NumberKind kind) {
    return ResampleTransform{NumberTypeSpec(kind), std::nullopt};
  };
  auto grouped = [](NumberStyle style) {
    return ResampleTransform{NumberTypeSpec(NumberKind::kIntLarge), style};
  };
  return {
      {"original", C::kOriginal, IdentityTransform{}, false, std::nullopt},
      {"words", C::kSameNumberRepresentation, StyleTransform{NumberStyle::kWords}, true, std::nullopt},
      {"trailing_zero", C::kSameNumberRepresentation,
       StyleTransform{NumberStyle::kTrailingZeroDecimal}, false, std::nullopt},
      {"no_leading_zero", C::kSameNumberRepresentation,
       StyleTransform{NumberStyle::kNoLeadingZero}, true, std::nullopt},
      {"commuted", C::kSameNumberRepresentation, CommuteTransform{}, true, 611},
      {"magnitude_-2", C::kMagnitudeVariant, ShiftTransform{-2}, false, std::nullopt},
      {"magnitude_-1", C::kMagnitudeVariant, ShiftTransform{-1}, false, std::nullopt},
      {"magnitude_+1", C::kMagnitudeVariant, ShiftTransform{1}, false, std::nullopt},
      {"magnitude_+2", C::kMagnitudeVariant, ShiftTransform{2}, false, std::nullopt},
      {"leading_point", C::kMagnitudeVariant, LeadingPointTransform{}, true, std::nullopt},
      {"comma_grouped", C::kDigitGrouping, grouped(NumberStyle::kCommaGrouped), false, std::nullopt},
      {"space_grouped", C::kDigitGrouping, grouped(NumberStyle::kSpaceGrouped), false, std::nullopt},
      {"int_large", C::kRangeOfNumbers, resample(NumberKind::kIntLarge), false, std::nullopt},
      {"int_small", C::kRangeOfNumbers, resample(NumberKind::kIntSmall), false, std::nullopt},
      {"int_2digit", C::kRangeOfNumbers, resample(NumberKind::kInt2Digit), false, std::nullopt},
      {"int_3digit", C::kRangeOfNumbers, resample(NumberKind::kInt3Digit), false, std::nullopt},
      {"int_4digit", C::kRangeOfNumbers, resample(NumberKind::kInt4Digit), false, std::nullopt},
      {"dec_1dp", C::kRangeOfNumbers, resample(NumberKind::kDec1dp0To1000), false, std::nullopt},
      {"dec_2dp", C::kRangeOfNumbers, resample(NumberKind::kDec2dp0To1000), false, std::nullopt},
  };
}

std::vector<Aspect> AspectsFromJson(const Json& registry) {
  if (!registry.is_array()) {
    throw Error(ErrorCode::kSchema, "aspect registry must be a JSON array");
  }
  std::vector<Aspect> out;
  std::set<std::string> names;
  for (const Json& record : registry) {
    Aspect a;
    a.name = RequireString(record, "name", "aspect");
    if (a.name.empty() || !names.insert(a.name).second) {
      throw Error(ErrorCode::kSchema, "aspect names must be unique and nonempty");
    }
    a.category = CategoryFromName(RequireString(record, "category", a.name));
    a.transform = TransformFromJson(RequireMember(record, "transform", a.name));
    if (record.contains("eligibility_restricted")) {
      const Json& flag = record["eligibility_restricted"];
      if (!flag.is_boolean()) {
        throw Error(ErrorCode::kSchema,
                    a.name + ": 'eligibility_restricted' must be a boolean");
      }
      a.eligibility_restricted = flag.get<bool>();
    }
    if (record.contains("reference_count")) {
      const Json& count = record["reference_count"];
      if (!count.is_number_unsigned()) {
        throw Error(ErrorCode::kSchema,
                    a.name + ": 'reference_count' must be a nonnegative integer");
      }
      a.reference_count = count.get<size_t>();
    }
    out.push_back(std::move(a));
  }
  return out;
}

Json AspectsToJson(std::span<const Aspect> aspects) {
  Json out = Json::array();
  for (const auto& a : aspects) {
    Json record = Json::object();
    record["name"] = a.name;
    record["category"] = CategoryName(a.category);
    record["transform"] = TransformToJson(a.transform);
    record["eligibility_restricted"] = a.eligibility_restricted;
    if (a.reference_count) record["reference_count"] = *a.reference_count;
    out.push_back(std::move(record));
  }
  return out;
}

Rng AspectRng(std::uint64_t run_seed, const SeedInstance& seed,
              const Aspect& aspect) {
  std::string key;
  if (const auto* r = std::get_if<ResampleTransform>(&aspect.transform)) {
    key = "resample:" + std::string(r->type.name());
  } else {
    key = "aspect:" + aspect.name;
  }
  return Rng(DeriveSeed(DeriveSeed(run_seed, seed.id), key));
}

ExpandResult ExpandInstance(const SeedInstance& seed, const Aspect& aspect,
                            Rng& rng, const AnswerConstraint& constraint) {
  auto transformed = Transform(seed, aspect, rng, constraint);
  if (auto* reason = std::get_if<std::string>(&transformed)) {
    return Skip(seed, aspect, *reason);
  }
  Instance inst;
  inst.id = seed.id + "/" + aspect.name;
  inst.seed_id = seed.id;
  inst.aspect = aspect.name;
  inst.numbers = std::move(std::get<std::vector<NumberLiteral>>(transformed));
  inst.expression = seed.expression;
  inst.signature = seed.signature;
  inst.question = Rewrite(seed, inst.numbers);
  const bool is_original =
      std::holds_alternative<IdentityTransform>(aspect.transform);
  if (!is_original && inst.question == seed.question) {
    return Skip(seed, aspect, "text identical to seed");
  }
  if (!is_original) {
    if (auto failure = CheckConstraint(inst.expression, inst.numbers, constraint)) {
      return Skip(seed, aspect, *failure);
    }
  }
  inst.answer = Evaluate(inst.expression, inst.numbers);
  return inst;
}

EvalSuite ExpandSuite(std::span<const SeedInstance> seeds,
                      std::span<const Aspect> aspects, std::uint64_t run_seed,
                      const AnswerConstraint& constraint) {
  const size_t n_aspects = aspects.size();
  std::vector<std::optional<ExpandResult>> results(seeds.size() * n_aspects);
  const size_t workers = std::max<size_t>(
      1, std::min<size_t>(std::thread::hardware_concurrency(), seeds.size()));
  {
    std::vector<std::jthread> pool;
    for (size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (size_t s = w; s < seeds.size(); s += workers) {
          for (size_t a = 0; a < n_aspects; ++a) {
            Rng rng = AspectRng(run_seed, seeds[s], aspects[a]);
            results[s * n_aspects + a] =
                ExpandInstance(seeds[s], aspects[a], rng, constraint);
          }
        }
      });
    }
  }

  std::vector<size_t> order(results.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    const auto& sx = seeds[x / n_aspects].id;
    const auto& sy = seeds[y / n_aspects].id;
    if (sx != sy) return sx < sy;
    return aspects[x % n_aspects].name < aspects[y % n_aspects].name;
  });

  EvalSuite suite;
  std::vector<std::unordered_set<std::string>> seen(n_aspects);
  std::vector<size_t> counts(n_aspects, 0);
  for (size_t idx : order) {
    const size_t a = idx % n_aspects;
    auto& result = *results[idx];
    if (auto* skip = std::get_if<SkipRecord>(&result)) {
      suite.skips.push_back(std::move(*skip));
      continue;
    }
    auto& inst = std::get<Instance>(result);
    if (!seen[a].insert(inst.question).second) {
      suite.skips.push_back({inst.seed_id, inst.aspect, "duplicate question text"});
      continue;
    }
    ++counts[a];
    suite.instances.push_back(std::move(inst));
  }
  for (size_t a = 0; a < n_aspects; ++a) {
    suite.counts.emplace_back(aspects[a].name, counts[a]);
  }
  return suite;
}

}  // namespace numview

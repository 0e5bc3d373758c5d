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

#include "numview/template_engine.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <future>
#include <set>
#include <sstream>

#include "numview/error.h"

namespace numview {
namespace {

bool IsWordChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

struct Placeholder {
  size_t begin;
  size_t end;
  int slot;
};

std::vector<Placeholder> ScanPlaceholders(std::string_view text) {
  std::vector<Placeholder> out;
  size_t pos = 0;
  while ((pos = text.find("num", pos)) != std::string_view::npos) {
    const size_t begin = pos;
    size_t end = pos + 3;
    while (end < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[end])) != 0) {
      ++end;
    }
    const bool bounded = (begin == 0 || !IsWordChar(text[begin - 1])) &&
                         end > begin + 3 &&
                         (end == text.size() || !IsWordChar(text[end])) &&
                         end - begin <= 5;
    if (bounded) {
      out.push_back({begin, end,
                     std::stoi(std::string(text.substr(begin + 3, end - begin - 3)))});
    }
    pos = end;
  }
  return out;
}

std::string TypeName(const NumberTypeSpec& spec) {
  return std::string(spec.name());
}

std::string Counter(std::int64_t n) {
  std::string digits = std::to_string(n);
  if (digits.size() < 6) digits.insert(0, 6 - digits.size(), '0');
  return digits;
}

struct Stratum {
  const RecipePart* part;
  NumberTypeSpec type;
  std::int64_t count;
};

BuiltDataset BuildStratum(const Stratum& stratum,
                          std::span<const Template> templates,
                          std::uint64_t seed,
                          const AnswerConstraint& constraint) {
  BuiltDataset out;
  if (stratum.count == 0) return out;
  std::vector<size_t> pool;
  for (size_t i = 0; i < templates.size(); ++i) {
    const auto& allowed = stratum.part->sources;
    if (std::find(allowed.begin(), allowed.end(), templates[i].source) !=
        allowed.end()) {
      pool.push_back(i);
    }
  }
  const std::string type_name = TypeName(stratum.type);
  if (pool.empty()) {
    throw Error(ErrorCode::kInfeasible, "no templates for part '" +
                                            stratum.part->label + "'");
  }
  Rng rng(DeriveSeed(seed, stratum.part->label + "/" + type_name));
  rng.Shuffle(pool);
  out.instances.reserve(static_cast<size_t>(stratum.count));
  size_t cursor = 0;
  size_t consecutive_failures = 0;
  while (static_cast<std::int64_t>(out.instances.size()) < stratum.count) {
    const Template& tmpl = templates[pool[cursor]];
    cursor = (cursor + 1) % pool.size();
    try {
      Instance inst = Instantiate(tmpl, stratum.type, constraint, rng);
      inst.aspect = stratum.part->label;
      inst.id = stratum.part->label + "-" + type_name + "-" +
                Counter(static_cast<std::int64_t>(out.instances.size()) + 1);
      out.instances.push_back(std::move(inst));
      consecutive_failures = 0;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInfeasible) throw;
      out.skips.push_back({tmpl.id, type_name, e.what()});
      if (++consecutive_failures >= pool.size()) {
        throw Error(ErrorCode::kInfeasible,
                    "no template of part '" + stratum.part->label +
                        "' can be instantiated with " + type_name);
      }
    }
  }
  return out;
}

RecipePart UniformPart(std::string label, std::int64_t total,
                       std::vector<TemplateSource> sources) {
  RecipePart part;
  part.label = std::move(label);
  part.total = total;
  part.sources = std::move(sources);
  for (NumberKind kind :
       {NumberKind::kInt0To1000, NumberKind::kInt1000To1000000,
        NumberKind::kDec1dp0To1000, NumberKind::kDec2dp0To1000}) {
    part.mix.push_back({NumberTypeSpec(kind), Rational(1, 4)});
  }
  return part;
}

}  // namespace

std::string_view SourceName(TemplateSource source) {
  switch (source) {
    case TemplateSource::kExpert: return "expert";
    case TemplateSource::kGsm8k: return "gsm8k";
    case TemplateSource::kAqua: return "aqua";
  }
  return "expert";
}

TemplateSource SourceFromName(std::string_view name) {
  for (TemplateSource s : AllSources()) {
    if (SourceName(s) == name) return s;
  }
  throw Error(ErrorCode::kSchema, "unknown template source: " + std::string(name));
}

std::span<const TemplateSource> AllSources() {
  static constexpr std::array<TemplateSource, 3> kSources = {
      TemplateSource::kExpert, TemplateSource::kGsm8k, TemplateSource::kAqua};
  return kSources;
}

std::vector<int> PlaceholderSlots(std::string_view text) {
  std::set<int> slots;
  for (const auto& p : ScanPlaceholders(text)) slots.insert(p.slot);
  return {slots.begin(), slots.end()};
}

std::string FillPlaceholders(std::string_view text,
                             std::span<const NumberLiteral> values) {
  std::string out;
  size_t last = 0;
  for (const auto& p : ScanPlaceholders(text)) {
    if (p.slot < 1 || static_cast<size_t>(p.slot) > values.size()) {
      throw Error(ErrorCode::kUnboundSlot,
                  "placeholder num" + std::to_string(p.slot) + " has no value");
    }
    out.append(text.substr(last, p.begin - last));
    out += Render(values[p.slot - 1]);
    last = p.end;
  }
  out.append(text.substr(last));
  return out;
}

Template MakeTemplate(std::string id, TemplateSource source, std::string text,
                      std::string_view expression) {
  Template t;
  t.id = std::move(id);
  t.source = source;
  t.text = std::move(text);
  t.expression = ParseExpression(expression);
  if (!t.expression.Literals().empty()) {
    throw Error(ErrorCode::kValidation,
                "template " + t.id + ": expression must use slots only");
  }
  std::vector<int> slots = t.expression.Slots();
  std::sort(slots.begin(), slots.end());
  slots.erase(std::unique(slots.begin(), slots.end()), slots.end());
  const std::vector<int> placeholders = PlaceholderSlots(t.text);
  if (slots != placeholders) {
    auto list = [](const std::vector<int>& v) {
      std::string s;
      for (int k : v) s += (s.empty() ? "num" : ",num") + std::to_string(k);
      return s.empty() ? std::string("none") : s;
    };
    throw Error(ErrorCode::kValidation,
                "template " + t.id + ": text placeholders {" + list(placeholders) +
                    "} differ from expression slots {" + list(slots) + "}");
  }
  if (slots.empty() || slots.back() > kMaxTemplateSlots) {
    throw Error(ErrorCode::kValidation,
                "template " + t.id + ": needs 1 to 3 slots num1..num3");
  }
  t.signature = OpSignature(t.expression);
  return t;
}

std::vector<Template> LoadTemplates(const std::string& path) {
  std::vector<Template> out;
  std::set<std::string> ids;
  for (const auto& line : ReadJsonLines(path)) {
    const std::string context = path + ":" + std::to_string(line.line_number);
    try {
      Template t = MakeTemplate(
          RequireString(line.value, "id", context),
          SourceFromName(RequireString(line.value, "source", context)),
          RequireString(line.value, "text", context),
          RequireString(line.value, "expression", context));
      if (!ids.insert(t.id).second) {
        throw Error(ErrorCode::kValidation, "duplicate template id " + t.id);
      }
      out.push_back(std::move(t));
    } catch (const Error& e) {
      throw Error(e.code(), context + ": " + e.what());
    }
  }
  return out;
}

TemplateInventory Inventory(std::span<const Template> templates) {
  TemplateInventory inv;
  inv.total = templates.size();
  for (TemplateSource s : AllSources()) inv.by_source[s] = 0;
  for (const auto& t : templates) {
    ++inv.by_source[t.source];
    ++inv.by_shape[t.signature.shape][t.source];
  }
  return inv;
}

std::string FormatInventory(const TemplateInventory& inv) {
  std::ostringstream out;
  out << "shape";
  for (TemplateSource s : AllSources()) out << '\t' << SourceName(s);
  out << "\ttotal\n";
  auto row = [&](std::string_view shape) {
    auto it = inv.by_shape.find(std::string(shape));
    if (it == inv.by_shape.end()) return;
    size_t total = 0;
    out << shape;
    for (TemplateSource s : AllSources()) {
      auto c = it->second.find(s);
      const size_t n = c == it->second.end() ? 0 : c->second;
      total += n;
      out << '\t' << n;
    }
    out << '\t' << total << '\n';
  };
  for (std::string_view shape : TemplateShapes()) row(shape);
  out << "total";
  for (TemplateSource s : AllSources()) out << '\t' << inv.by_source.at(s);
  out << '\t' << inv.total << '\n';
  return out.str();
}

Instance Instantiate(const Template& tmpl, const NumberTypeSpec& spec,
                     const AnswerConstraint& constraint, Rng& rng) {
  SampleResult sample = SampleSlotValues(tmpl.expression, spec, constraint, rng);
  if (!sample.values) {
    throw Error(ErrorCode::kInfeasible,
                "template " + tmpl.id + " with " + TypeName(spec) + ": " +
                    sample.last_failure + " after " +
                    std::to_string(sample.attempts) + " attempts");
  }
  Instance inst;
  inst.seed_id = tmpl.id;
  inst.template_id = tmpl.id;
  inst.number_type = TypeName(spec);
  inst.numbers = std::move(*sample.values);
  inst.question = FillPlaceholders(tmpl.text, inst.numbers);
  inst.expression = tmpl.expression;
  inst.answer = Evaluate(tmpl.expression, inst.numbers);
  inst.signature = tmpl.signature;
  return inst;
}

std::int64_t Recipe::TotalCount() const {
  std::int64_t total = 0;
  for (const auto& p : parts) total += p.total;
  return total;
}

Recipe PresetRecipe(std::string_view name) {
  const std::vector<TemplateSource> expert = {TemplateSource::kExpert};
  const std::vector<TemplateSource> all(AllSources().begin(), AllSources().end());
  Recipe r;
  r.name = std::string(name);
  if (name == "dev") {
    r.parts.push_back(UniformPart("dev", 1000, expert));
    return r;
  }
  if (name != "base" && name != "base_scaled_up" && name != "base_diversified") {
    throw Error(ErrorCode::kUsage, "unknown recipe: " + std::string(name));
  }
  r.parts.push_back(UniformPart("base", 200000, expert));
  if (name == "base_scaled_up") {
    r.parts.push_back(UniformPart("scaled_up", 100000, expert));
  } else if (name == "base_diversified") {
    r.parts.push_back(UniformPart("diversified", 100000, all));
  }
  return r;
}

Recipe RecipeFromJson(const Json& record) {
  Recipe r;
  r.name = RequireString(record, "name", "recipe");
  const Json& parts = RequireMember(record, "parts", "recipe");
  if (!parts.is_array()) throw Error(ErrorCode::kSchema, "recipe: 'parts' not an array");
  for (const Json& p : parts) {
    RecipePart part;
    part.label = RequireString(p, "label", "recipe part");
    const Json& total = RequireMember(p, "total", "recipe part");
    if (!total.is_number_integer() || total.get<std::int64_t>() < 0) {
      throw Error(ErrorCode::kSchema, "recipe part: 'total' must be a nonnegative integer");
    }
    part.total = total.get<std::int64_t>();
    for (const Json& m : RequireMember(p, "mix", "recipe part")) {
      const Json& prop = RequireMember(m, "proportion", "recipe mix");
      Rational proportion;
      if (prop.is_string()) {
        proportion = Rational::Parse(prop.get<std::string>());
      } else if (prop.is_number_integer()) {
        proportion = Rational(prop.get<std::int64_t>());
      } else {
        throw Error(ErrorCode::kSchema,
                    "recipe mix: 'proportion' must be an integer or a string");
      }
      part.mix.push_back(
          {NumberTypeSpec::FromName(RequireString(m, "type", "recipe mix")),
           proportion});
    }
    for (const Json& s : RequireMember(p, "sources", "recipe part")) {
      if (!s.is_string()) throw Error(ErrorCode::kSchema, "recipe: sources are strings");
      part.sources.push_back(SourceFromName(s.get<std::string>()));
    }
    r.parts.push_back(std::move(part));
  }
  return r;
}

BuiltDataset BuildRecipe(const Recipe& recipe,
                         std::span<const Template> templates,
                         std::uint64_t seed,
                         const AnswerConstraint& constraint) {
  std::vector<Stratum> strata;
  std::set<std::string> labels;
  for (const auto& part : recipe.parts) {
    if (!labels.insert(part.label).second) {
      throw Error(ErrorCode::kInfeasible, "duplicate part label " + part.label);
    }
    Rational sum;
    std::set<std::string> types;
    for (const auto& share : part.mix) {
      if (!types.insert(TypeName(share.type)).second) {
        throw Error(ErrorCode::kInfeasible, "part " + part.label +
                                                " lists " + TypeName(share.type) +
                                                " twice");
      }
      if (share.proportion.sign() < 0) {
        throw Error(ErrorCode::kInfeasible, "negative proportion in " + part.label);
      }
      sum += share.proportion;
      const Rational count = share.proportion * Rational(part.total);
      if (!count.is_integer()) {
        throw Error(ErrorCode::kInfeasible,
                    "part " + part.label + ": " + share.proportion.ToString() +
                        " of " + std::to_string(part.total) +
                        " is not a whole number");
      }
      strata.push_back({&part, share.type,
                        static_cast<std::int64_t>(count.numerator())});
    }
    if (part.total > 0 && sum != Rational(1)) {
      throw Error(ErrorCode::kInfeasible, "part " + part.label +
                                              ": proportions sum to " +
                                              sum.ToString());
    }
  }
  std::vector<std::future<BuiltDataset>> jobs;
  for (const auto& stratum : strata) {
    jobs.push_back(std::async(std::launch::async, [&, stratum] {
      return BuildStratum(stratum, templates, seed, constraint);
    }));
  }
  BuiltDataset out;
  std::vector<BuiltDataset> results;
  for (auto& job : jobs) results.push_back(job.get());
  for (auto& r : results) {
    std::move(r.instances.begin(), r.instances.end(),
              std::back_inserter(out.instances));
    std::move(r.skips.begin(), r.skips.end(), std::back_inserter(out.skips));
  }
  return out;
}

}  // namespace numview

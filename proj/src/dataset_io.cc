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

#include "numview/dataset_io.h"

#include <array>
#include <fstream>
#include <sstream>

#include "numview/error.h"

namespace numview {
namespace {

Error SchemaError(std::string_view context, const std::string& what) {
  return Error(ErrorCode::kSchema, std::string(context) + ": " + what);
}

int RequireInt(const Json& record, std::string_view key,
               std::string_view context) {
  const Json& value = RequireMember(record, key, context);
  if (!value.is_number_integer()) {
    throw SchemaError(context, "'" + std::string(key) + "' must be an integer");
  }
  return value.get<int>();
}

}  // namespace

const Json& RequireMember(const Json& record, std::string_view key,
                          std::string_view context) {
  if (!record.is_object()) throw SchemaError(context, "record is not an object");
  auto it = record.find(key);
  if (it == record.end()) {
    throw SchemaError(context, "missing '" + std::string(key) + "'");
  }
  return *it;
}

std::string RequireString(const Json& record, std::string_view key,
                          std::string_view context) {
  const Json& value = RequireMember(record, key, context);
  if (!value.is_string()) {
    throw SchemaError(context, "'" + std::string(key) + "' must be a string");
  }
  return value.get<std::string>();
}

Json RunConfig::ToJson() const {
  Json options_json = Json::object();
  for (const auto& [key, value] : options) options_json[key] = value;
  Json out = Json::object();
  out["command"] = command;
  out["seed"] = seed;
  out["options"] = std::move(options_json);
  out["version"] = kToolVersion;
  return out;
}

RunConfig RunConfig::FromJson(const Json& header) {
  RunConfig config;
  config.command = RequireString(header, "command", "header");
  const Json& seed = RequireMember(header, "seed", "header");
  if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
    throw SchemaError("header", "'seed' must be an integer");
  }
  config.seed = seed.get<std::uint64_t>();
  const Json& options = RequireMember(header, "options", "header");
  if (!options.is_object()) throw SchemaError("header", "'options' not an object");
  for (const auto& [key, value] : options.items()) {
    if (!value.is_string()) throw SchemaError("header", "option values are strings");
    config.options[key] = value.get<std::string>();
  }
  return config;
}

std::vector<JsonLine> ReadJsonLines(const std::string& path,
                                    std::optional<RunConfig>* header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  if (header != nullptr) header->reset();
  std::vector<JsonLine> lines;
  std::string text;
  size_t line_number = 0;
  while (std::getline(in, text)) {
    ++line_number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    Json value;
    try {
      value = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::kSchema, path + ":" + std::to_string(line_number) +
                                          ": invalid JSON: " + e.what());
    }
    if (lines.empty() && value.is_object() && value.contains(kHeaderKey)) {
      if (header != nullptr) *header = RunConfig::FromJson(value[kHeaderKey]);
      continue;
    }
    lines.push_back({line_number, std::move(value)});
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read failed: " + path);
  return lines;
}

JsonLinesWriter::JsonLinesWriter(const std::string& path)
    : path_(path), out_(path, std::ios::binary | std::ios::trunc) {
  if (!out_) throw Error(ErrorCode::kIo, "cannot write " + path);
}

void JsonLinesWriter::WriteHeader(const RunConfig& config) {
  Json record = Json::object();
  record[kHeaderKey] = config.ToJson();
  Write(record);
}

void JsonLinesWriter::Write(const Json& record) {
  out_ << record.dump() << '\n';
}

void JsonLinesWriter::Close() {
  out_.close();
  if (out_.fail()) throw Error(ErrorCode::kIo, "write failed: " + path_);
}

Json NumberToJson(const NumberLiteral& literal) {
  Json out = Json::object();
  out["surface"] = Render(literal);
  out["value"] = literal.value().ToString();
  out["scale"] = literal.scale();
  out["style"] = StyleName(literal.style());
  return out;
}

NumberLiteral NumberFromJson(const Json& record) {
  const std::string value = RequireString(record, "value", "number");
  const int scale = RequireInt(record, "scale", "number");
  const NumberStyle style =
      StyleFromName(RequireString(record, "style", "number"));
  const Rational exact = Rational::Parse(value);
  if (!exact.is_terminating() || scale < 0 || exact.DecimalScale() > scale) {
    throw SchemaError("number", "value " + value + " does not fit scale " +
                                    std::to_string(scale));
  }
  // Rebuild the literal at the recorded scale so trailing zeros survive.
  const Rational scaled = exact * Rational::Pow10(scale);
  BigInt magnitude = scaled.numerator();
  const int sign = magnitude < 0 ? -1 : 1;
  if (magnitude < 0) magnitude = -magnitude;
  NumberLiteral literal(sign, magnitude.str(), scale);
  if (!literal.CanUseStyle(style)) {
    throw SchemaError("number", "style " + std::string(StyleName(style)) +
                                    " invalid for " + value);
  }
  literal = literal.WithStyle(style);
  if (record.contains("surface") && record["surface"].is_string() &&
      record["surface"].get<std::string>() != Render(literal)) {
    throw SchemaError("number", "surface '" +
                                    record["surface"].get<std::string>() +
                                    "' does not render " + value);
  }
  return literal;
}

Json InstanceToJson(const Instance& instance) {
  Json out = Json::object();
  out["id"] = instance.id;
  out["seed_id"] = instance.seed_id;
  out["aspect"] = instance.aspect;
  out["question"] = instance.question;
  out["answer_surface"] = instance.AnswerSurface();
  out["answer_value"] = instance.answer.ToString();
  out["expression"] = instance.BoundExpression().ToString();
  out["expression_slots"] = instance.expression.ToString();
  Json numbers = Json::array();
  for (const auto& n : instance.numbers) numbers.push_back(NumberToJson(n));
  out["numbers"] = std::move(numbers);
  out["signature"] = instance.signature.shape;
  out["hops"] = instance.signature.hop_count;
  if (!instance.template_id.empty()) out["template_id"] = instance.template_id;
  if (!instance.number_type.empty()) out["number_type"] = instance.number_type;
  if (!instance.prompt.empty()) out["prompt"] = instance.prompt;
  return out;
}

Instance InstanceFromJson(const Json& record) {
  Instance inst;
  inst.id = RequireString(record, "id", "instance");
  const std::string context = "instance " + inst.id;
  inst.seed_id = RequireString(record, "seed_id", context);
  inst.aspect = RequireString(record, "aspect", context);
  inst.question = RequireString(record, "question", context);
  inst.expression =
      ParseExpression(RequireString(record, "expression_slots", context));
  const Json& numbers = RequireMember(record, "numbers", context);
  if (!numbers.is_array()) throw SchemaError(context, "'numbers' not an array");
  for (const auto& n : numbers) inst.numbers.push_back(NumberFromJson(n));
  inst.answer = Rational::Parse(RequireString(record, "answer_value", context));
  if (Evaluate(inst.expression, inst.numbers) != inst.answer) {
    throw Error(ErrorCode::kValidation,
                context + ": answer_value does not match expression");
  }
  inst.signature = OpSignature(inst.expression);
  if (record.contains("template_id")) {
    inst.template_id = RequireString(record, "template_id", context);
  }
  if (record.contains("number_type")) {
    inst.number_type = RequireString(record, "number_type", context);
  }
  if (record.contains("prompt")) {
    inst.prompt = RequireString(record, "prompt", context);
  }
  return inst;
}

std::vector<Instance> LoadInstances(const std::string& path,
                                    std::optional<RunConfig>* header) {
  std::vector<Instance> out;
  for (const auto& line : ReadJsonLines(path, header)) {
    try {
      out.push_back(InstanceFromJson(line.value));
    } catch (const Error& e) {
      throw Error(e.code(),
                  path + ":" + std::to_string(line.line_number) + ": " + e.what());
    }
  }
  return out;
}

void WriteInstances(const std::string& path, const RunConfig& config,
                    std::span<const Instance> instances) {
  JsonLinesWriter writer(path);
  writer.WriteHeader(config);
  for (const auto& inst : instances) writer.Write(InstanceToJson(inst));
  writer.Close();
}

std::string WrapPrompt(std::string_view question,
                       const PromptWrapper& wrapper) {
  std::string out;
  out.reserve(wrapper.prefix.size() + question.size() + wrapper.suffix.size());
  out.append(wrapper.prefix).append(question).append(wrapper.suffix);
  return out;
}

std::optional<std::string> UnwrapPrompt(std::string_view text,
                                        const PromptWrapper& wrapper) {
  if (text.size() < wrapper.prefix.size() + wrapper.suffix.size() ||
      !text.starts_with(wrapper.prefix) || !text.ends_with(wrapper.suffix)) {
    return std::nullopt;
  }
  text.remove_prefix(wrapper.prefix.size());
  text.remove_suffix(wrapper.suffix.size());
  return std::string(text);
}

std::span<const PromptWrapper> BuiltinPromptWrappers() {
  static const std::array<PromptWrapper, 5> kWrappers = {{
      {"none", "", ""},
      {"t0_trivia", "Answer the following question. ", ""},
      {"webqa", "Question: ", " Answer: "},
      {"flan_trivia", "Please answer this question: ", ""},
      {"nt5", "answer_me: ", ""},
  }};
  return kWrappers;
}

const PromptWrapper& PromptWrapperByName(std::string_view name) {
  for (const auto& w : BuiltinPromptWrappers()) {
    if (w.name == name) return w;
  }
  throw Error(ErrorCode::kUsage, "unknown prompt wrapper: " + std::string(name));
}

std::vector<Prediction> LoadPredictions(const std::string& path) {
  std::vector<Prediction> out;
  for (const auto& line : ReadJsonLines(path)) {
    const std::string context = path + ":" + std::to_string(line.line_number);
    Prediction p;
    p.id = RequireString(line.value, "id", context);
    p.output = RequireString(line.value, "output", context);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace numview

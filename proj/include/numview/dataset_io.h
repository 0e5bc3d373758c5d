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

#ifndef NUMVIEW_DATASET_IO_H_
#define NUMVIEW_DATASET_IO_H_

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "numview/instance.h"
#include "numview/number_forms.h"

namespace numview {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolVersion = "numview 1.0.0";
inline constexpr std::string_view kHeaderKey = "_header";

// Provenance written as the first record of every output file. Re-running
// the recorded command with these options reproduces the file.
struct RunConfig {
  std::string command;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> options;

  Json ToJson() const;
  static RunConfig FromJson(const Json& header);

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct JsonLine {
  size_t line_number;
  Json value;
};

// Reads one JSON value per non-empty line. A leading header record is
// returned through `header` and not included in the result. Throws kIo when
// the file cannot be opened and kSchema on malformed lines.
std::vector<JsonLine> ReadJsonLines(const std::string& path,
                                    std::optional<RunConfig>* header = nullptr);

class JsonLinesWriter {
 public:
  // Throws kIo.
  explicit JsonLinesWriter(const std::string& path);
  void WriteHeader(const RunConfig& config);
  void Write(const Json& record);
  // Throws kIo if any write failed.
  void Close();

 private:
  std::string path_;
  std::ofstream out_;
};

// {surface, value, scale, style}
Json NumberToJson(const NumberLiteral& literal);
NumberLiteral NumberFromJson(const Json& record);

// {id, seed_id, aspect, question, answer_surface, answer_value, expression,
//  numbers[]} plus expression_slots, signature, hops and, for training
// data, template_id and number_type.
Json InstanceToJson(const Instance& instance);
Instance InstanceFromJson(const Json& record);

std::vector<Instance> LoadInstances(const std::string& path,
                                    std::optional<RunConfig>* header = nullptr);
void WriteInstances(const std::string& path, const RunConfig& config,
                    std::span<const Instance> instances);

struct PromptWrapper {
  std::string name;
  std::string prefix;
  std::string suffix;
};

std::string WrapPrompt(std::string_view question, const PromptWrapper& wrapper);
// The question inside `text`, or nullopt if `text` is not wrapped this way.
std::optional<std::string> UnwrapPrompt(std::string_view text,
                                        const PromptWrapper& wrapper);
std::span<const PromptWrapper> BuiltinPromptWrappers();
// Throws kUsage for an unknown name.
const PromptWrapper& PromptWrapperByName(std::string_view name);

struct Prediction {
  std::string id;
  std::string output;
};

// {id, output} per line.
std::vector<Prediction> LoadPredictions(const std::string& path);

// Reads a required member, throwing kSchema naming `context` when absent or
// of the wrong type.
const Json& RequireMember(const Json& record, std::string_view key,
                          std::string_view context);
std::string RequireString(const Json& record, std::string_view key,
                          std::string_view context);

}  // namespace numview

#endif  // NUMVIEW_DATASET_IO_H_

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

// Command-line entry point: gen-eval, gen-train, validate, classify, score
// and report.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "numview/aspect_expander.h"
#include "numview/dataset_io.h"
#include "numview/dependency_classifier.h"
#include "numview/error.h"
#include "numview/eval_harness.h"
#include "numview/template_engine.h"

namespace numview {
namespace {

int ExitCode(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsage: return 1;
    case ErrorCode::kIo: return 3;
    default: return 2;
  }
}

void PrintError(std::string_view code, std::string_view message) {
  Json err = Json::object();
  err["error"] = {{"code", code}, {"message", message}};
  std::cerr << err.dump() << '\n';
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kSchema, path + ": invalid JSON: " + e.what());
  }
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << text;
  out.close();
  if (out.fail()) throw Error(ErrorCode::kIo, "write failed: " + path);
}

void WriteSkips(const std::string& path, const RunConfig& config,
                std::span<const SkipRecord> skips) {
  JsonLinesWriter writer(path);
  writer.WriteHeader(config);
  for (const auto& s : skips) {
    writer.Write(Json{{"source", s.source}, {"label", s.label}, {"reason", s.reason}});
  }
  writer.Close();
}

void ApplyPrompt(std::vector<Instance>& instances, const PromptWrapper& wrapper) {
  if (wrapper.name == "none") return;
  for (auto& inst : instances) inst.prompt = WrapPrompt(inst.question, wrapper);
}

struct GenEvalArgs {
  std::string seeds;
  std::string aspects;
  std::uint64_t seed = 0;
  std::string out;
  std::string prompt = "none";
};

int GenEval(const GenEvalArgs& args) {
  const PromptWrapper& wrapper = PromptWrapperByName(args.prompt);
  const std::vector<SeedInstance> seeds = LoadSeeds(args.seeds);
  const std::vector<Aspect> aspects =
      args.aspects.empty() ? DefaultAspects() : AspectsFromJson(ReadJsonFile(args.aspects));
  EvalSuite suite = ExpandSuite(seeds, aspects, args.seed);
  ApplyPrompt(suite.instances, wrapper);

  RunConfig config{"gen-eval", args.seed,
                   {{"seeds", args.seeds},
                    {"aspects", args.aspects.empty() ? "default" : args.aspects},
                    {"prompt", args.prompt}}};
  WriteInstances(args.out, config, suite.instances);
  WriteSkips(args.out + ".skips.jsonl", config, suite.skips);

  std::map<std::string, std::map<std::string, size_t>> reasons;
  for (const auto& s : suite.skips) ++reasons[s.label][s.reason];
  Json summary = Json::object();
  summary["seeds"] = seeds.size();
  summary["instances"] = suite.instances.size();
  summary["skips"] = suite.skips.size();
  Json rows = Json::array();
  for (size_t i = 0; i < aspects.size(); ++i) {
    Json row = Json::object();
    row["aspect"] = aspects[i].name;
    row["category"] = CategoryName(aspects[i].category);
    row["count"] = suite.counts[i].second;
    row["eligibility_restricted"] = aspects[i].eligibility_restricted;
    if (aspects[i].reference_count) row["reference_count"] = *aspects[i].reference_count;
    Json skip_reasons = Json::object();
    for (const auto& [reason, n] : reasons[aspects[i].name]) skip_reasons[reason] = n;
    row["skip_reasons"] = std::move(skip_reasons);
    rows.push_back(std::move(row));
  }
  summary["aspects"] = std::move(rows);
  std::cout << summary.dump(2) << '\n';
  return 0;
}

struct GenTrainArgs {
  std::string templates;
  std::string recipe;
  std::uint64_t seed = 0;
  std::string out;
  std::string prompt = "none";
  bool allow_negative = false;
};

int GenTrain(const GenTrainArgs& args) {
  const PromptWrapper& wrapper = PromptWrapperByName(args.prompt);
  const std::vector<Template> templates = LoadTemplates(args.templates);
  Recipe recipe;
  if (args.recipe.ends_with(".json")) {
    recipe = RecipeFromJson(ReadJsonFile(args.recipe));
  } else {
    recipe = PresetRecipe(args.recipe);
  }
  AnswerConstraint constraint;
  if (args.allow_negative) {
    constraint.require_nonnegative_answer = false;
    constraint.require_nonnegative_intermediates = false;
  }
  BuiltDataset data = BuildRecipe(recipe, templates, args.seed, constraint);
  ApplyPrompt(data.instances, wrapper);

  RunConfig config{"gen-train", args.seed,
                   {{"templates", args.templates},
                    {"recipe", args.recipe},
                    {"prompt", args.prompt},
                    {"allow_negative", args.allow_negative ? "true" : "false"}}};
  WriteInstances(args.out, config, data.instances);
  WriteSkips(args.out + ".skips.jsonl", config, data.skips);

  std::map<std::string, std::map<std::string, size_t>> counts;
  std::map<std::string, size_t> by_source;
  std::map<std::string, TemplateSource> source_of;
  for (const auto& t : templates) source_of.emplace(t.id, t.source);
  for (const auto& inst : data.instances) {
    ++counts[inst.aspect][inst.number_type];
    ++by_source[std::string(SourceName(source_of.at(inst.template_id)))];
  }
  Json summary = Json::object();
  summary["recipe"] = recipe.name;
  summary["instances"] = data.instances.size();
  summary["skips"] = data.skips.size();
  Json parts = Json::object();
  for (const auto& [label, types] : counts) {
    Json t = Json::object();
    for (const auto& [type, n] : types) t[type] = n;
    parts[label] = std::move(t);
  }
  summary["parts"] = std::move(parts);
  Json sources = Json::object();
  for (const auto& [s, n] : by_source) sources[s] = n;
  summary["sources"] = std::move(sources);
  std::cout << summary.dump(2) << '\n';
  return 0;
}

int Validate(const std::string& seeds_path, const std::string& templates_path) {
  if (seeds_path.empty() && templates_path.empty()) {
    throw Error(ErrorCode::kUsage, "validate needs --seeds and/or --templates");
  }
  int status = 0;
  if (!seeds_path.empty()) {
    const SeedCorpusReport report = ValidateSeedCorpus(ReadJsonLines(seeds_path));
    std::cout << FormatSeedReport(report);
    if (!report.errors.empty()) status = 2;
  }
  if (!templates_path.empty()) {
    const std::vector<Template> templates = LoadTemplates(templates_path);
    std::cout << FormatInventory(Inventory(templates));
  }
  return status;
}

TrainingIndex BuildIndex(const std::string& train_path) {
  TrainingIndex index;
  for (const auto& inst : LoadInstances(train_path)) index.Add(inst.BoundExpression());
  return index;
}

struct ClassifyArgs {
  std::string train;
  std::string suite;
  std::string out;
  std::string predictions;
  std::string strategy = "last_number";
  bool union_classes = false;
};

int Classify(const ClassifyArgs& args) {
  const ExtractionStrategy strategy = StrategyFromName(args.strategy);
  const TrainingIndex index = BuildIndex(args.train);
  const std::vector<Instance> suite = LoadInstances(args.suite);
  std::vector<DependencyClass> classes;
  classes.reserve(suite.size());
  for (const auto& inst : suite) {
    const Expression bound = inst.BoundExpression();
    classes.push_back(args.union_classes ? index.ClassifyUnion(bound)
                                         : index.Classify(bound));
  }
  std::vector<std::optional<bool>> correct(suite.size());
  if (!args.predictions.empty()) {
    ScoreOptions options;
    options.strategy = strategy;
    const ScoreReport report = ScoreFile(LoadPredictions(args.predictions), suite, options);
    for (size_t i = 0; i < suite.size(); ++i) correct[i] = report.items[i].correct;
  }

  RunConfig config{"classify", 0,
                   {{"train", args.train},
                    {"suite", args.suite},
                    {"predictions", args.predictions},
                    {"strategy", args.strategy},
                    {"union", args.union_classes ? "true" : "false"}}};
  JsonLinesWriter writer(args.out);
  writer.WriteHeader(config);
  for (size_t i = 0; i < suite.size(); ++i) {
    Json record = Json::object();
    record["id"] = suite[i].id;
    record["aspect"] = suite[i].aspect;
    record["class"] = DependencyClassName(classes[i]);
    if (correct[i]) record["correct"] = *correct[i];
    writer.Write(record);
  }
  writer.Close();

  std::vector<ScoreRow> rows;
  std::array<ClassTally, kDependencyClassCount> tally{};
  if (!args.predictions.empty()) {
    std::unique_ptr<bool[]> flags(new bool[suite.size()]);
    for (size_t i = 0; i < suite.size(); ++i) flags[i] = *correct[i];
    tally = Breakdown(classes, std::span<const bool>(flags.get(), suite.size()));
  } else {
    for (DependencyClass c : classes) ++tally[static_cast<size_t>(c)].total;
  }
  for (DependencyClass c : AllDependencyClasses()) {
    const ClassTally& t = tally[static_cast<size_t>(c)];
    rows.push_back(ScoreRow{std::string(DependencyClassName(c)), t.total, t.correct, 0});
  }
  std::cout << DependencyCsv(rows);
  return 0;
}

struct ScoreArgs {
  std::string predictions;
  std::string suite;
  std::string strategy = "last_number";
  std::string train;
  std::string prompt;
  std::string out;
  bool union_classes = false;
  bool words = false;
};

int Score(const ScoreArgs& args) {
  ScoreOptions options;
  options.strategy = StrategyFromName(args.strategy);
  options.parse_words = args.words;
  if (!args.prompt.empty()) options.prompt = &PromptWrapperByName(args.prompt);
  std::optional<TrainingIndex> index;
  if (!args.train.empty()) {
    index = BuildIndex(args.train);
    options.training = &*index;
    options.union_classes = args.union_classes;
  }
  const std::vector<Instance> suite = LoadInstances(args.suite);
  const ScoreReport report = ScoreFile(LoadPredictions(args.predictions), suite, options);

  RunConfig config{"score", 0,
                   {{"predictions", args.predictions},
                    {"suite", args.suite},
                    {"strategy", args.strategy},
                    {"train", args.train},
                    {"prompt", args.prompt},
                    {"union", args.union_classes ? "true" : "false"},
                    {"words", args.words ? "true" : "false"}}};
  Json file = Json::object();
  file[kHeaderKey] = config.ToJson();
  file["report"] = ReportToJson(report);
  WriteText(args.out, file.dump(2) + "\n");
  std::cout << RowsCsv("aspect", report.by_aspect);
  return 0;
}

int Report(const std::string& in, const std::string& out_prefix) {
  const Json file = ReadJsonFile(in);
  const ScoreReport report = ReportFromJson(RequireMember(file, "report", in));
  WriteText(out_prefix + ".aspects.csv", RowsCsv("aspect", report.by_aspect));
  WriteText(out_prefix + ".signatures.csv", RowsCsv("signature", report.by_signature));
  if (!report.by_dependency.empty()) {
    WriteText(out_prefix + ".dependency.csv", DependencyCsv(report.by_dependency));
    WriteText(out_prefix + ".dependency.svg", DependencyChartSvg(report.by_dependency));
  }
  std::cout << RowsCsv("aspect", report.by_aspect);
  return 0;
}

int Run(int argc, char** argv) {
  CLI::App app{"Multi-view arithmetic evaluation and training set toolkit", "numview"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  GenEvalArgs eval_args;
  auto* gen_eval = app.add_subcommand("gen-eval", "Expand seeds into the aspect suite");
  gen_eval->add_option("--seeds", eval_args.seeds, "Seed corpus (JSON lines)")->required();
  gen_eval->add_option("--aspects", eval_args.aspects, "Aspect registry override (JSON)");
  gen_eval->add_option("--seed", eval_args.seed, "Random seed");
  gen_eval->add_option("--out", eval_args.out, "Output suite")->required();
  gen_eval->add_option("--prompt", eval_args.prompt, "Prompt wrapper name");

  GenTrainArgs train_args;
  auto* gen_train = app.add_subcommand("gen-train", "Build a training set from templates");
  gen_train->add_option("--templates", train_args.templates, "Template file")->required();
  gen_train->add_option("--recipe", train_args.recipe,
                        "base | base_scaled_up | base_diversified | dev | <recipe>.json")
      ->required();
  gen_train->add_option("--seed", train_args.seed, "Random seed");
  gen_train->add_option("--out", train_args.out, "Output dataset")->required();
  gen_train->add_option("--prompt", train_args.prompt, "Prompt wrapper name");
  gen_train->add_flag("--allow-negative", train_args.allow_negative,
                      "Permit negative answers and intermediate results");

  std::string validate_seeds, validate_templates;
  auto* validate = app.add_subcommand("validate", "Check a seed corpus and/or templates");
  validate->add_option("--seeds", validate_seeds, "Seed corpus");
  validate->add_option("--templates", validate_templates, "Template file");

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "Training dependency class per test item");
  classify->add_option("--train", classify_args.train, "Training dataset")->required();
  classify->add_option("--suite", classify_args.suite, "Evaluation suite")->required();
  classify->add_option("--out", classify_args.out, "Per-item classes")->required();
  classify->add_option("--predictions", classify_args.predictions, "Predictions to join");
  classify->add_option("--strategy", classify_args.strategy, "Answer extraction strategy");
  classify->add_flag("--union", classify_args.union_classes,
                     "Let numbers and operations come from different training items");

  ScoreArgs score_args;
  auto* score = app.add_subcommand("score", "Score a prediction file");
  score->add_option("--predictions", score_args.predictions, "Predictions")->required();
  score->add_option("--suite", score_args.suite, "Evaluation suite")->required();
  score->add_option("--strategy", score_args.strategy,
                    "first_number | last_number | whole_output");
  score->add_option("--train", score_args.train, "Training dataset for dependency rows");
  score->add_option("--prompt", score_args.prompt, "Strip this wrapper's echo from outputs");
  score->add_option("--out", score_args.out, "Report file (JSON)")->required();
  score->add_flag("--union", score_args.union_classes, "Union dependency classes");
  score->add_flag("--words", score_args.words, "Also read numbers written as words");

  std::string report_in, report_out;
  auto* report = app.add_subcommand("report", "Render a score report as CSV and SVG");
  report->add_option("--in", report_in, "Report file from score")->required();
  report->add_option("--out", report_out, "Output path prefix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    PrintError(ErrorCodeName(ErrorCode::kUsage), e.what());
    return 1;
  }

  try {
    if (*gen_eval) return GenEval(eval_args);
    if (*gen_train) return GenTrain(train_args);
    if (*validate) return Validate(validate_seeds, validate_templates);
    if (*classify) return Classify(classify_args);
    if (*score) return Score(score_args);
    if (*report) return Report(report_in, report_out);
  } catch (const Error& e) {
    PrintError(ErrorCodeName(e.code()), e.what());
    return ExitCode(e.code());
  } catch (const std::exception& e) {
    PrintError("internal", e.what());
    return 2;
  }
  return 1;
}

}  // namespace
}  // namespace numview

int main(int argc, char** argv) { return numview::Run(argc, argv); }

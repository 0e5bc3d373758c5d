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

#include "numview/eval_harness.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "numview/error.h"

namespace numview {
namespace {

constexpr size_t kMaxWordRun = 12;

bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool IsAlnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool IsAlpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

size_t DigitRun(std::string_view text, size_t i) {
  size_t j = i;
  while (j < text.size() && IsDigit(text[j])) ++j;
  return j - i;
}

// End of the numeral whose first digit or point is at `i`.
size_t ScanNumeralBody(std::string_view text, size_t i) {
  size_t j = i;
  const size_t first = DigitRun(text, j);
  j += first;
  if (first >= 1 && first <= 3) {
    char sep = 0;
    while (j < text.size() &&
           (text[j] == ',' || text[j] == ' ') && (sep == 0 || text[j] == sep) &&
           DigitRun(text, j + 1) == 3) {
      sep = text[j];
      j += 4;
    }
  }
  if (j + 1 < text.size() && text[j] == '.' && IsDigit(text[j + 1])) {
    j += 1 + DigitRun(text, j + 1);
  }
  return j;
}

std::vector<NumericToken> ScanDigitTokens(std::string_view text) {
  std::vector<NumericToken> out;
  size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const bool prev_digit = i > 0 && IsDigit(text[i - 1]);
    const bool prev_alnum = i > 0 && IsAlnum(text[i - 1]);
    auto starts_body = [&](size_t k) {
      return k < text.size() &&
             (IsDigit(text[k]) ||
              (text[k] == '.' && k + 1 < text.size() && IsDigit(text[k + 1])));
    };
    size_t body = std::string_view::npos;
    if (IsDigit(c)) {
      body = i;
    } else if (c == '.' && !prev_digit && starts_body(i)) {
      body = i;
    } else if ((c == '-' || c == '+') && !prev_alnum && starts_body(i + 1)) {
      body = i + 1;
    }
    if (body == std::string_view::npos) {
      ++i;
      continue;
    }
    const size_t end = ScanNumeralBody(text, body);
    out.push_back({i, end, ParseNumber(text.substr(i, end - i))});
    i = end;
  }
  return out;
}

std::vector<NumericToken> ScanWordTokens(std::string_view text) {
  struct Word {
    size_t begin;
    size_t end;
    std::string lower;
  };
  std::vector<Word> words;
  for (size_t i = 0; i < text.size();) {
    if (!IsAlpha(text[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && (IsAlpha(text[j]) || text[j] == '-')) ++j;
    while (j > i && text[j - 1] == '-') --j;
    std::string lower(text.substr(i, j - i));
    for (char& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    words.push_back({i, j, std::move(lower)});
    i = j;
  }
  std::vector<NumericToken> out;
  for (size_t i = 0; i < words.size();) {
    size_t matched = 0;
    std::uint64_t value = 0;
    std::string joined;
    for (size_t n = 1; n <= kMaxWordRun && i + n <= words.size(); ++n) {
      // Words of one cardinal are separated by single spaces.
      if (n > 1 && text.substr(words[i + n - 2].end,
                               words[i + n - 1].begin - words[i + n - 2].end) != " ") {
        break;
      }
      joined += (n > 1 ? " " : "") + words[i + n - 1].lower;
      if (auto v = ParseWords(joined)) {
        matched = n;
        value = *v;
      }
    }
    if (matched == 0) {
      ++i;
      continue;
    }
    out.push_back({words[i].begin, words[i + matched - 1].end,
                   NumberLiteral::FromScaled(static_cast<std::int64_t>(value), 0)
                       .WithStyle(NumberStyle::kWords)});
    i += matched;
  }
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double Percent(size_t part, size_t whole) {
  return whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

std::string FormatFixed(double value, int places) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", places, value);
  return buf;
}

void Tally(ScoreRow& row, const ScoredItem& item) {
  ++row.total;
  if (item.correct) ++row.correct;
  if (item.magnitude_error) ++row.magnitude_errors;
}

Json RowsToJson(std::span<const ScoreRow> rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row = Json::object();
    row["key"] = r.key;
    row["total"] = r.total;
    row["correct"] = r.correct;
    row["accuracy"] = r.Accuracy();
    row["magnitude_errors"] = r.magnitude_errors;
    row["magnitude_rate"] = r.MagnitudeRate();
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<ScoreRow> RowsFromJson(const Json& rows) {
  if (!rows.is_array()) throw Error(ErrorCode::kSchema, "report rows must be an array");
  std::vector<ScoreRow> out;
  for (const Json& r : rows) {
    ScoreRow row;
    row.key = RequireString(r, "key", "report row");
    row.total = RequireMember(r, "total", "report row").get<size_t>();
    row.correct = RequireMember(r, "correct", "report row").get<size_t>();
    row.magnitude_errors =
        RequireMember(r, "magnitude_errors", "report row").get<size_t>();
    if (row.correct > row.total || row.magnitude_errors > row.total) {
      throw Error(ErrorCode::kSchema, "report row " + row.key + " has counts above its total");
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::string XmlEscape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string_view StrategyName(ExtractionStrategy strategy) {
  switch (strategy) {
    case ExtractionStrategy::kFirstNumber: return "first_number";
    case ExtractionStrategy::kLastNumber: return "last_number";
    case ExtractionStrategy::kWholeOutput: return "whole_output";
  }
  return "last_number";
}

ExtractionStrategy StrategyFromName(std::string_view name) {
  for (auto s : {ExtractionStrategy::kFirstNumber, ExtractionStrategy::kLastNumber,
                 ExtractionStrategy::kWholeOutput}) {
    if (StrategyName(s) == name) return s;
  }
  throw Error(ErrorCode::kUsage, "unknown extraction strategy: " + std::string(name));
}

std::vector<NumericToken> ScanNumbers(std::string_view text, bool parse_words) {
  std::vector<NumericToken> tokens = ScanDigitTokens(text);
  if (!parse_words) return tokens;
  std::vector<NumericToken> words = ScanWordTokens(text);
  std::vector<NumericToken> merged;
  std::merge(tokens.begin(), tokens.end(), words.begin(), words.end(),
             std::back_inserter(merged),
             [](const NumericToken& a, const NumericToken& b) { return a.begin < b.begin; });
  return merged;
}

std::optional<NumberLiteral> ExtractAnswer(std::string_view output,
                                           ExtractionStrategy strategy,
                                           bool parse_words) {
  if (strategy == ExtractionStrategy::kWholeOutput) {
    std::string_view body = Trim(output);
    if (!body.empty() && body.back() == '.') body = Trim(body.substr(0, body.size() - 1));
    const auto tokens = ScanNumbers(body, parse_words);
    if (tokens.size() != 1 || tokens[0].begin != 0 || tokens[0].end != body.size()) {
      return std::nullopt;
    }
    return tokens[0].literal;
  }
  const auto tokens = ScanNumbers(output, parse_words);
  if (tokens.empty()) return std::nullopt;
  return strategy == ExtractionStrategy::kFirstNumber ? tokens.front().literal
                                                      : tokens.back().literal;
}

bool IsCorrect(const std::optional<NumberLiteral>& prediction,
               const Rational& gold) {
  return prediction.has_value() && prediction->value() == gold;
}

bool DiagnoseMagnitude(const std::optional<NumberLiteral>& prediction,
                       const Rational& gold) {
  if (!prediction || prediction->value() == gold || !gold.is_terminating()) {
    return false;
  }
  return prediction->SignificantDigits() ==
         NumberLiteral::FromRational(gold).SignificantDigits();
}

double ScoreRow::Accuracy() const { return Percent(correct, total); }
double ScoreRow::MagnitudeRate() const { return Percent(magnitude_errors, total); }

ScoreReport ScoreFile(std::span<const Prediction> predictions,
                      std::span<const Instance> suite,
                      const ScoreOptions& options) {
  std::unordered_map<std::string, const Prediction*> by_id;
  for (const auto& p : predictions) {
    if (!by_id.emplace(p.id, &p).second) {
      throw Error(ErrorCode::kValidation, "duplicate prediction id " + p.id);
    }
  }
  std::unordered_map<std::string, size_t> suite_ids;
  for (size_t i = 0; i < suite.size(); ++i) {
    if (!suite_ids.emplace(suite[i].id, i).second) {
      throw Error(ErrorCode::kValidation, "duplicate suite id " + suite[i].id);
    }
    if (!by_id.contains(suite[i].id)) {
      throw Error(ErrorCode::kValidation, "missing prediction for id " + suite[i].id);
    }
  }
  for (const auto& p : predictions) {
    if (!suite_ids.contains(p.id)) {
      throw Error(ErrorCode::kValidation, "prediction id " + p.id + " is not in the suite");
    }
  }

  ScoreReport report;
  report.strategy = options.strategy;
  report.items.resize(suite.size());
  auto score_range = [&](size_t begin, size_t step) {
    for (size_t i = begin; i < suite.size(); i += step) {
      const Instance& inst = suite[i];
      std::string_view output = by_id.at(inst.id)->output;
      std::string echo;
      if (options.prompt != nullptr) {
        echo = WrapPrompt(inst.question, *options.prompt);
        if (!echo.empty() && output.starts_with(echo)) output.remove_prefix(echo.size());
      }
      const auto extracted = ExtractAnswer(output, options.strategy, options.parse_words);
      ScoredItem& item = report.items[i];
      item.id = inst.id;
      item.aspect = inst.aspect;
      item.signature = inst.signature.shape;
      if (extracted) item.extracted = extracted->value().ToString();
      item.correct = IsCorrect(extracted, inst.answer);
      item.magnitude_error = DiagnoseMagnitude(extracted, inst.answer);
      if (options.training != nullptr) {
        const Expression bound = inst.BoundExpression();
        item.dependency = options.union_classes
                              ? options.training->ClassifyUnion(bound)
                              : options.training->Classify(bound);
      }
    }
  };
  const size_t workers = std::max<size_t>(
      1, std::min<size_t>(std::thread::hardware_concurrency(), suite.size()));
  {
    std::vector<std::jthread> pool;
    for (size_t w = 0; w < workers; ++w) pool.emplace_back(score_range, w, workers);
  }

  std::map<std::string, size_t> aspect_index;
  std::map<std::string, ScoreRow> signature_rows;
  std::array<ScoreRow, kDependencyClassCount> class_rows{};
  report.overall.key = "all";
  for (const auto& item : report.items) {
    auto [it, inserted] = aspect_index.emplace(item.aspect, report.by_aspect.size());
    if (inserted) report.by_aspect.push_back(ScoreRow{item.aspect});
    Tally(report.by_aspect[it->second], item);
    ScoreRow& sig = signature_rows[item.signature];
    sig.key = item.signature;
    Tally(sig, item);
    if (item.dependency) Tally(class_rows[static_cast<size_t>(*item.dependency)], item);
    Tally(report.overall, item);
  }
  for (std::string_view shape : TemplateShapes()) {
    auto it = signature_rows.find(std::string(shape));
    if (it == signature_rows.end()) continue;
    report.by_signature.push_back(it->second);
    signature_rows.erase(it);
  }
  for (auto& [key, row] : signature_rows) report.by_signature.push_back(row);
  if (options.training != nullptr) {
    for (DependencyClass c : AllDependencyClasses()) {
      ScoreRow row = class_rows[static_cast<size_t>(c)];
      row.key = std::string(DependencyClassName(c));
      report.by_dependency.push_back(row);
    }
  }
  return report;
}

Json ReportToJson(const ScoreReport& report) {
  Json out = Json::object();
  out["strategy"] = StrategyName(report.strategy);
  out["overall"] = RowsToJson(std::span(&report.overall, 1))[0];
  out["by_aspect"] = RowsToJson(report.by_aspect);
  out["by_signature"] = RowsToJson(report.by_signature);
  out["by_dependency"] = RowsToJson(report.by_dependency);
  return out;
}

ScoreReport ReportFromJson(const Json& record) {
  ScoreReport report;
  report.strategy = StrategyFromName(RequireString(record, "strategy", "report"));
  report.overall = RowsFromJson(Json::array({RequireMember(record, "overall", "report")}))[0];
  report.by_aspect = RowsFromJson(RequireMember(record, "by_aspect", "report"));
  report.by_signature = RowsFromJson(RequireMember(record, "by_signature", "report"));
  report.by_dependency = RowsFromJson(RequireMember(record, "by_dependency", "report"));
  return report;
}

std::string RowsCsv(std::string_view key_header, std::span<const ScoreRow> rows) {
  std::ostringstream out;
  out << key_header << ",total,correct,accuracy,magnitude_errors,magnitude_rate\n";
  for (const auto& r : rows) {
    out << r.key << ',' << r.total << ',' << r.correct << ','
        << FormatFixed(r.Accuracy(), 2) << ',' << r.magnitude_errors << ','
        << FormatFixed(r.MagnitudeRate(), 2) << '\n';
  }
  return out.str();
}

std::string DependencyCsv(std::span<const ScoreRow> rows) {
  std::ostringstream out;
  out << "class,total,correct,incorrect,correct_ratio\n";
  for (const auto& r : rows) {
    const double ratio = r.total == 0 ? 0.0 : static_cast<double>(r.correct) / r.total;
    out << r.key << ',' << r.total << ',' << r.correct << ','
        << (r.total - r.correct) << ',' << FormatFixed(ratio, 4) << '\n';
  }
  return out.str();
}

std::string DependencyChartSvg(std::span<const ScoreRow> rows) {
  constexpr int kLabelWidth = 190;
  constexpr int kBarWidth = 480;
  constexpr int kRowHeight = 34;
  constexpr int kTop = 40;
  size_t max_total = 1;
  for (const auto& r : rows) max_total = std::max(max_total, r.total);
  const int height = kTop + static_cast<int>(rows.size()) * kRowHeight + 30;
  const int width = kLabelWidth + kBarWidth + 120;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" font-family=\"sans-serif\" font-size=\"13\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<rect x=\"" << kLabelWidth << "\" y=\"12\" width=\"12\" height=\"12\" fill=\"#f28e2b\"/>"
      << "<text x=\"" << kLabelWidth + 18 << "\" y=\"23\">correct</text>\n";
  out << "<rect x=\"" << kLabelWidth + 100 << "\" y=\"12\" width=\"12\" height=\"12\" fill=\"#4e79a7\"/>"
      << "<text x=\"" << kLabelWidth + 118 << "\" y=\"23\">incorrect</text>\n";
  int y = kTop;
  for (const auto& r : rows) {
    const int correct_w = static_cast<int>(kBarWidth * r.correct / max_total);
    const int incorrect_w = static_cast<int>(kBarWidth * (r.total - r.correct) / max_total);
    out << "<text x=\"" << kLabelWidth - 8 << "\" y=\"" << y + 18
        << "\" text-anchor=\"end\">" << XmlEscape(r.key) << "</text>\n";
    out << "<rect x=\"" << kLabelWidth << "\" y=\"" << y + 4 << "\" width=\"" << correct_w
        << "\" height=\"" << kRowHeight - 10 << "\" fill=\"#f28e2b\"/>\n";
    out << "<rect x=\"" << kLabelWidth + correct_w << "\" y=\"" << y + 4 << "\" width=\""
        << incorrect_w << "\" height=\"" << kRowHeight - 10 << "\" fill=\"#4e79a7\"/>\n";
    out << "<text x=\"" << kLabelWidth + correct_w + incorrect_w + 6 << "\" y=\"" << y + 18
        << "\">" << r.correct << "/" << r.total << "</text>\n";
    y += kRowHeight;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace numview

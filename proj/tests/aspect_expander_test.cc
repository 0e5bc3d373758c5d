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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <tuple>

#include "numview/error.h"

namespace numview {
namespace {

const std::string kSeeds = std::string(NUMVIEW_DATA_DIR) + "/fixtures/seeds.jsonl";

SeedInstance Beavers() {
  return SeedFromJson(Json::parse(R"({
    "id": "s-beavers",
    "question": "89 beavers were working on their home. 30 went for a swim. How many beavers are still working on their home?",
    "numbers": [{"surface": "89", "span": [0, 2]}, {"surface": "30", "span": [39, 41]}],
    "expression": "num1 - num2",
    "answer": "59"})"));
}

SeedInstance Seed(const char* question, std::vector<std::pair<const char*, int>> numbers,
                  const char* expression, const char* answer) {
  Json record = {{"id", "s"}, {"question", question}, {"expression", expression},
                 {"answer", answer}};
  Json nums = Json::array();
  for (auto [surface, begin] : numbers) {
    nums.push_back({{"surface", surface},
                    {"span", Json::array({begin, begin + static_cast<int>(std::string(surface).size())})}});
  }
  record["numbers"] = nums;
  return SeedFromJson(record);
}

const Aspect& Find(const std::vector<Aspect>& aspects, std::string_view name) {
  for (const auto& a : aspects) {
    if (a.name == name) return a;
  }
  throw std::runtime_error("no aspect " + std::string(name));
}

ExpandResult Expand(const SeedInstance& seed, std::string_view aspect_name,
                    std::uint64_t run_seed = 1) {
  static const std::vector<Aspect> aspects = DefaultAspects();
  const Aspect& aspect = Find(aspects, aspect_name);
  Rng rng = AspectRng(run_seed, seed, aspect);
  return ExpandInstance(seed, aspect, rng);
}

TEST(DefaultAspectsTest, Structure) {
  const auto aspects = DefaultAspects();
  ASSERT_EQ(aspects.size(), 19u);
  std::map<AspectCategory, int> per_category;
  for (const auto& a : aspects) ++per_category[a.category];
  EXPECT_EQ(per_category[AspectCategory::kOriginal], 1);
  EXPECT_EQ(per_category[AspectCategory::kSameNumberRepresentation], 4);
  EXPECT_EQ(per_category[AspectCategory::kMagnitudeVariant], 5);
  EXPECT_EQ(per_category[AspectCategory::kDigitGrouping], 2);
  EXPECT_EQ(per_category[AspectCategory::kRangeOfNumbers], 7);
  EXPECT_EQ(Find(aspects, "commuted").reference_count, 611u);
}

TEST(DefaultAspectsTest, JsonRoundTrip) {
  const auto aspects = DefaultAspects();
  const Json json = AspectsToJson(aspects);
  const auto back = AspectsFromJson(json);
  EXPECT_EQ(AspectsToJson(back), json);
  EXPECT_THROW(AspectsFromJson(Json::parse(R"([{"name":"x","category":"original","transform":{"kind":"warp"}}])")),
               Error);
}

TEST(SeedFromJsonTest, Validation) {
  const SeedInstance s = Beavers();
  EXPECT_EQ(s.answer, Rational(59));
  EXPECT_EQ(s.signature.shape, "a-b");
  EXPECT_THROW(Seed("3 and 4", {{"3", 0}, {"4", 6}}, "num1+num2", "8"), Error);
  EXPECT_THROW(Seed("3 and 4", {{"3", 0}, {"4", 5}}, "num1+num2", "7"), Error);
  EXPECT_THROW(Seed("3 and 4", {{"3", 0}, {"4", 6}}, "num1+num3", "7"), Error);
  EXPECT_THROW(Seed("1 2 3 4", {{"1", 0}, {"2", 2}, {"3", 4}, {"4", 6}},
                    "((num1+num2)+num3)+num4", "10"),
               Error);
  // Spans count code points, not bytes.
  const SeedInstance accented = Seed("Zo\xC3\xAB has 4 and 5", {{"4", 8}, {"5", 14}},
                                     "num1*num2", "20");
  EXPECT_EQ(accented.answer, Rational(20));
}

TEST(ExpandInstanceTest, TwoDigitBeavers) {
  const SeedInstance seed = Beavers();
  const ExpandResult result = Expand(seed, "int_2digit");
  ASSERT_TRUE(std::holds_alternative<Instance>(result));
  const Instance& inst = std::get<Instance>(result);
  for (const auto& n : inst.numbers) {
    EXPECT_TRUE(NumberTypeSpec(NumberKind::kInt2Digit).Contains(n));
  }
  EXPECT_EQ(inst.answer, inst.numbers[0].value() - inst.numbers[1].value());
  EXPECT_EQ(inst.signature, seed.signature);
  EXPECT_NE(inst.question.find(" beavers were working on their home. "), std::string::npos);
  EXPECT_EQ(std::get<Instance>(Expand(seed, "original")).answer, Rational(59));
}

TEST(ExpandInstanceTest, CommutedSkipsNonCommutative) {
  const ExpandResult result = Expand(Beavers(), "commuted");
  ASSERT_TRUE(std::holds_alternative<SkipRecord>(result));
  EXPECT_EQ(std::get<SkipRecord>(result).reason, "no commutative operation");
  const SeedInstance equal = Seed("4 and 4", {{"4", 0}, {"4", 6}}, "num1+num2", "8");
  EXPECT_TRUE(std::holds_alternative<SkipRecord>(Expand(equal, "commuted")));
  const SeedInstance sum = Seed("12 times 34", {{"12", 0}, {"34", 9}}, "num1*num2", "408");
  const Instance swapped = std::get<Instance>(Expand(sum, "commuted"));
  EXPECT_EQ(swapped.question, "34 times 12");
  EXPECT_EQ(swapped.answer, Rational(408));
  const Instance shifted = std::get<Instance>(Expand(sum, "magnitude_-1"));
  EXPECT_EQ(shifted.question, "1.2 times 3.4");
  EXPECT_EQ(shifted.answer, Rational::Parse("4.08"));
}

TEST(ExpandInstanceTest, SameNumberRepresentations) {
  const SeedInstance seed = Seed("0.32 of 3 jars", {{"0.32", 0}, {"3", 8}}, "num1*num2", "0.96");
  const Instance nlz = std::get<Instance>(Expand(seed, "no_leading_zero"));
  EXPECT_EQ(nlz.question, ".32 of 3 jars");
  EXPECT_EQ(nlz.answer, Rational::Parse("0.96"));
  const Instance tz = std::get<Instance>(Expand(seed, "trailing_zero"));
  EXPECT_EQ(tz.question, "0.320 of 3.0 jars");
  const Instance words = std::get<Instance>(Expand(seed, "words"));
  EXPECT_EQ(words.question, "0.32 of three jars");
  EXPECT_EQ(words.answer, seed.answer);
  const Instance point = std::get<Instance>(Expand(Beavers(), "leading_point"));
  EXPECT_EQ(point.numbers[0].value(), Rational::Parse("0.89"));
  EXPECT_EQ(point.numbers[1].value(), Rational::Parse("0.30"));
}

TEST(ExpandInstanceTest, DigitGroupingSharesLargeIntegers) {
  const SeedInstance seed = Beavers();
  const Instance large = std::get<Instance>(Expand(seed, "int_large", 5));
  const Instance comma = std::get<Instance>(Expand(seed, "comma_grouped", 5));
  const Instance space = std::get<Instance>(Expand(seed, "space_grouped", 5));
  for (size_t i = 0; i < large.numbers.size(); ++i) {
    EXPECT_EQ(large.numbers[i].value(), comma.numbers[i].value());
    EXPECT_EQ(large.numbers[i].value(), space.numbers[i].value());
    if (large.numbers[i].IntegerPart().size() >= 5) {
      EXPECT_EQ(comma.numbers[i].style(), NumberStyle::kCommaGrouped);
    }
  }
  std::string spaced = comma.question;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  EXPECT_EQ(spaced, space.question);
}

class FixtureSuiteTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    seeds_ = new std::vector<SeedInstance>(LoadSeeds(kSeeds));
    suite_ = new EvalSuite(ExpandSuite(*seeds_, DefaultAspects(), 11));
  }
  static void TearDownTestSuite() {
    delete suite_;
    delete seeds_;
  }
  static std::vector<SeedInstance>* seeds_;
  static EvalSuite* suite_;
};
std::vector<SeedInstance>* FixtureSuiteTest::seeds_ = nullptr;
EvalSuite* FixtureSuiteTest::suite_ = nullptr;

TEST_F(FixtureSuiteTest, CountsAndOrder) {
  ASSERT_EQ(seeds_->size(), 1111u);
  const auto aspects = DefaultAspects();
  for (size_t i = 0; i < aspects.size(); ++i) {
    EXPECT_EQ(suite_->counts[i].first, aspects[i].name);
    EXPECT_LE(suite_->counts[i].second, seeds_->size());
    if (!aspects[i].eligibility_restricted) {
      EXPECT_EQ(suite_->counts[i].second, 1111u) << aspects[i].name;
    }
  }
  for (size_t i = 1; i < suite_->instances.size(); ++i) {
    const auto& a = suite_->instances[i - 1];
    const auto& b = suite_->instances[i];
    ASSERT_TRUE(std::tie(a.seed_id, a.aspect) < std::tie(b.seed_id, b.aspect));
  }
}

TEST_F(FixtureSuiteTest, AspectInvariants) {
  std::map<std::string, const SeedInstance*> by_id;
  for (const auto& s : *seeds_) by_id[s.id] = &s;
  std::map<std::string, Aspect> aspects;
  for (auto& a : DefaultAspects()) aspects.emplace(a.name, a);
  for (const auto& inst : suite_->instances) {
    const SeedInstance& seed = *by_id.at(inst.seed_id);
    const Aspect& aspect = aspects.at(inst.aspect);
    ASSERT_EQ(inst.signature, seed.signature);
    ASSERT_EQ(OpSignature(inst.expression), seed.signature);
    ASSERT_EQ(Evaluate(inst.expression, inst.numbers), inst.answer);
    ASSERT_TRUE(inst.answer.is_terminating());
    switch (aspect.category) {
      case AspectCategory::kSameNumberRepresentation:
        if (inst.aspect != "commuted") {
          for (size_t i = 0; i < inst.numbers.size(); ++i) {
            ASSERT_EQ(inst.numbers[i].value(), seed.numbers[i].value());
          }
        }
        ASSERT_EQ(inst.answer, seed.answer);
        break;
      case AspectCategory::kMagnitudeVariant:
        for (size_t i = 0; i < inst.numbers.size(); ++i) {
          ASSERT_EQ(inst.numbers[i].SignificantDigits(), seed.numbers[i].SignificantDigits());
        }
        break;
      case AspectCategory::kRangeOfNumbers: {
        const auto& t = std::get<ResampleTransform>(aspect.transform);
        for (const auto& n : inst.numbers) ASSERT_TRUE(t.type.Contains(n)) << inst.id;
        break;
      }
      default:
        break;
    }
  }
}

TEST_F(FixtureSuiteTest, LanguageFixed) {
  std::map<std::string, const SeedInstance*> by_id;
  for (const auto& s : *seeds_) by_id[s.id] = &s;
  for (const auto& inst : suite_->instances) {
    const SeedInstance& seed = *by_id.at(inst.seed_id);
    std::string masked;
    size_t last = 0;
    for (const auto& [b, e] : seed.spans) {
      masked += seed.question.substr(last, b - last) + "#";
      last = e;
    }
    masked += seed.question.substr(last);
    std::string rebuilt;
    last = 0;
    size_t k = 0;
    for (size_t i = 0; i < masked.size(); ++i) {
      if (masked[i] == '#') {
        rebuilt += Render(inst.numbers[k++]);
      } else {
        rebuilt += masked[i];
      }
    }
    ASSERT_EQ(rebuilt, inst.question) << inst.id;
  }
}

TEST_F(FixtureSuiteTest, Deterministic) {
  const EvalSuite again = ExpandSuite(*seeds_, DefaultAspects(), 11);
  ASSERT_EQ(again.instances.size(), suite_->instances.size());
  for (size_t i = 0; i < again.instances.size(); ++i) {
    ASSERT_EQ(again.instances[i].question, suite_->instances[i].question);
  }
  EXPECT_TRUE(ExpandSuite({}, DefaultAspects(), 11).instances.empty());
}

TEST(ValidateSeedCorpusTest, FixtureDistribution) {
  const SeedCorpusReport report = ValidateSeedCorpus(ReadJsonLines(kSeeds));
  EXPECT_TRUE(report.errors.empty());
  EXPECT_EQ(report.total, 1111u);
  EXPECT_EQ(report.one_hop, 531u);
  EXPECT_EQ(report.two_hop, 580u);
  const std::map<std::string, size_t> expected = {
      {"a+b", 154},    {"a-b", 162},     {"a*b", 113},     {"a/b", 102},    {"(a+b)-c", 190},
      {"a*(b+c)", 100}, {"(a+b)/c", 90}, {"a*(b-c)", 100}, {"(a-b)/c", 100}};
  EXPECT_EQ(report.by_shape, expected);
}

TEST(ValidateSeedCorpusTest, ReportsBadSeeds) {
  std::vector<JsonLine> lines;
  lines.push_back({1, Json::parse(R"({"id":"a","question":"1 2 3 4","numbers":[{"surface":"1","span":[0,1]},{"surface":"2","span":[2,3]},{"surface":"3","span":[4,5]},{"surface":"4","span":[6,7]}],"expression":"num1+num2+num3+num4","answer":"10"})")});
  lines.push_back({2, Json::parse(R"({"id":"b","question":"1 2","numbers":[{"surface":"1","span":[0,1]},{"surface":"2","span":[2,3]}],"expression":"num1+num2","answer":"4"})")});
  lines.push_back({3, Json::parse(R"({"id":"c","question":"1 2","numbers":[{"surface":"1","span":[0,1]},{"surface":"2","span":[2,3]}],"expression":"num1+num2","answer":"3"})")});
  const SeedCorpusReport report = ValidateSeedCorpus(lines);
  EXPECT_EQ(report.total, 1u);
  ASSERT_EQ(report.errors.size(), 2u);
  EXPECT_NE(report.errors[0].find("line 1"), std::string::npos);
  EXPECT_NE(report.errors[1].find("stored answer"), std::string::npos);
}

}  // namespace
}  // namespace numview

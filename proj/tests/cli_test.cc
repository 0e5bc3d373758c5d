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

#include <gtest/gtest.h>

#include <filesystem>
#include <string>
#include <vector>

#include "cli_runner.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using testing_support::CommandResult;
using testing_support::ReadFile;

const std::string kData = NUMVIEW_DATA_DIR;
const std::string kSeeds = kData + "/fixtures/seeds.jsonl";
const std::string kTemplates = kData + "/fixtures/templates.jsonl";

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           (std::string("numview_cli_") +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  CommandResult Run(const std::vector<std::string>& args) {
    return testing_support::RunCommand(NUMVIEW_CLI, args, dir_);
  }
  std::string File(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Run({}).exit_code, 1);
  const CommandResult r = Run({"score", "--suite", "x.jsonl", "--out", File("r.json")});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(Run({"gen-train", "--templates", kTemplates, "--recipe", "huge", "--out",
                 File("t.jsonl")})
                .exit_code,
            1);
}

TEST_F(CliTest, MissingFileIsIoError) {
  const CommandResult r = Run({"gen-eval", "--seeds", File("absent.jsonl"), "--out", File("o")});
  EXPECT_EQ(r.exit_code, 3);
  const auto error = nlohmann::json::parse(r.err);
  EXPECT_EQ(error["error"]["code"], "io");
}

TEST_F(CliTest, Validate) {
  const CommandResult r = Run({"validate", "--seeds", kSeeds, "--templates", kTemplates});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("a+b\t154\n"), std::string::npos);
  EXPECT_NE(r.out.find("total\t1111\n"), std::string::npos);
  EXPECT_NE(r.out.find("total\t100\t155\t71\t326"), std::string::npos);
}

TEST_F(CliTest, ValidateFlagsBadSeeds) {
  std::ofstream(File("bad.jsonl"))
      << R"({"id":"a","question":"1 2","numbers":[{"surface":"1","span":[0,1]},{"surface":"2","span":[2,3]}],"expression":"num1+num2","answer":"4"})"
      << "\n";
  const CommandResult r = Run({"validate", "--seeds", File("bad.jsonl")});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.out.find("errors\t1"), std::string::npos);
}

TEST_F(CliTest, EndToEnd) {
  CommandResult r = Run({"gen-train", "--templates", kTemplates, "--recipe", "dev", "--seed",
                         "4", "--out", File("train.jsonl")});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["instances"], 1000);
  r = Run({"gen-train", "--templates", kTemplates, "--recipe", "dev", "--seed", "4", "--out",
           File("train2.jsonl")});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(ReadFile(File("train.jsonl")), ReadFile(File("train2.jsonl")));

  r = Run({"gen-eval", "--seeds", kSeeds, "--seed", "4", "--out", File("suite.jsonl"),
           "--prompt", "webqa"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto summary = nlohmann::json::parse(r.out);
  EXPECT_EQ(summary["seeds"], 1111);
  EXPECT_EQ(summary["aspects"].size(), 19u);
  EXPECT_TRUE(fs::exists(File("suite.jsonl.skips.jsonl")));

  // Echo every prompt followed by its gold answer.
  std::ofstream predictions(File("pred.jsonl"));
  bool first = true;
  size_t count = 0;
  std::ifstream suite(File("suite.jsonl"));
  for (std::string line; std::getline(suite, line);) {
    const auto record = nlohmann::json::parse(line);
    if (first) {
      first = false;
      ASSERT_TRUE(record.contains("_header"));
      continue;
    }
    nlohmann::json p = {{"id", record["id"]},
                        {"output", record["prompt"].get<std::string>() +
                                       record["answer_surface"].get<std::string>()}};
    predictions << p.dump() << "\n";
    ++count;
  }
  predictions.close();
  EXPECT_EQ(summary["instances"], count);

  r = Run({"score", "--predictions", File("pred.jsonl"), "--suite", File("suite.jsonl"),
           "--strategy", "first_number", "--prompt", "webqa", "--train", File("train.jsonl"),
           "--out", File("report.json")});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto report = nlohmann::json::parse(ReadFile(File("report.json")));
  EXPECT_EQ(report["report"]["overall"]["correct"], count);
  EXPECT_NE(r.out.find("original,1111,1111,100.00"), std::string::npos);

  r = Run({"report", "--in", File("report.json"), "--out", File("rep")});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  for (const char* suffix : {".aspects.csv", ".signatures.csv", ".dependency.csv",
                             ".dependency.svg"}) {
    EXPECT_TRUE(fs::exists(File(std::string("rep") + suffix))) << suffix;
  }

  r = Run({"classify", "--train", File("train.jsonl"), "--suite", File("suite.jsonl"), "--out",
           File("classes.jsonl")});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("class,total,correct,incorrect,correct_ratio\n", 0), 0u);
}

}  // namespace

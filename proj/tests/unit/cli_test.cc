// Copyright 2026 The mlbalance Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "fixtures.h"
#include "json.hpp"
#include "mlbalance/mulan_io.h"

namespace mlbalance::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mlbalance_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    save_mulan(mlbalance::testing::toy6(), p("toy6.arff"), p("toy6.xml"));
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string p(const std::string& name) const { return (dir_ / name).string(); }

  int run_cli(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, InfoPrintsToy6Row) {
  ASSERT_EQ(run_cli({"info", p("toy6.arff")}), kExitOk) << err_.str();
  const std::string text = out_.str();
  for (const char* cell : {"1.3333", "0.4444", "2.8333", "0.0585"}) {
    EXPECT_NE(text.find(cell), std::string::npos) << cell << "\n" << text;
  }
}

TEST_F(CliTest, InfoWritesJson) {
  ASSERT_EQ(run_cli({"info", p("toy6.arff"), "--json", p("prof.json")}), kExitOk);
  const Json j = Json::parse(read_text_file(p("prof.json")));
  EXPECT_EQ(j["distinct_labelsets"], 4);
}

TEST_F(CliTest, MissingXmlIsInputError) {
  fs::remove(p("toy6.xml"));
  EXPECT_EQ(run_cli({"info", p("toy6.arff")}), kExitInputError);
  EXPECT_NE(err_.str().find("toy6.xml"), std::string::npos) << err_.str();
}

TEST_F(CliTest, MalformedArffIsInputError) {
  write_text_file(p("bad.arff"), "@relation x\n@attribute A {0,1}\n@data\n1,1\n");
  write_text_file(p("bad.xml"), "<labels><label name=\"A\"/></labels>");
  EXPECT_EQ(run_cli({"info", p("bad.arff")}), kExitInputError);
  EXPECT_NE(err_.str().find("line 4"), std::string::npos) << err_.str();
}

TEST_F(CliTest, ResampleMlRos) {
  ASSERT_EQ(run_cli({"resample", p("toy6.arff"), "--method", "mlros", "--p", "25",
                     "--seed", "7", "--out", p("out/ros")}),
            kExitOk)
      << err_.str();
  const auto d = load_mulan(p("out/ros.arff"), p("out/ros.xml"));
  EXPECT_EQ(d.num_instances(), 7u);
  const Json report = Json::parse(read_text_file(p("out/ros.report.json")));
  EXPECT_EQ(report["stages"][0]["added"][0]["source"], 5);
  const Json manifest = Json::parse(read_text_file(p("out/ros.manifest.json")));
  EXPECT_EQ(manifest["seed"], 7);
  EXPECT_EQ(manifest["command"], "resample");
}

TEST_F(CliTest, ResampleHybridHasTwoStages) {
  ASSERT_EQ(run_cli({"resample", p("toy6.arff"), "--remedial", "p50", "--method",
                     "mlsmote", "--k", "5", "--seed", "1", "--out", p("hyb")}),
            kExitOk)
      << err_.str();
  const Json report = Json::parse(read_text_file(p("hyb.report.json")));
  ASSERT_EQ(report["stages"].size(), 2u);
  EXPECT_EQ(report["stages"][0]["instances_after"],
            report["stages"][1]["instances_before"]);
}

TEST_F(CliTest, ParameterErrors) {
  EXPECT_EQ(run_cli({"resample", p("toy6.arff"), "--method", "nope", "--out",
                     p("x")}),
            kExitParameterError);
  EXPECT_EQ(run_cli({"resample", p("toy6.arff"), "--method", "mlenn", "--nn", "6",
                     "--out", p("x")}),
            kExitParameterError);
  EXPECT_EQ(run_cli({"resample", p("toy6.arff"), "--method", "mlros",
                     "--remedial", "p100", "--out", p("x")}),
            kExitParameterError);
  EXPECT_EQ(run_cli({"partition", p("toy6.arff"), "--folds", "7", "--out-dir",
                     p("parts")}),
            kExitParameterError);
  EXPECT_EQ(run_cli({"bogus"}), kExitParameterError);
  EXPECT_EQ(run_cli({"info"}), kExitParameterError);
}

TEST_F(CliTest, SeedFromEnvironment) {
  ::setenv(kSeedEnvVar, "13", 1);
  const int rc = run_cli({"resample", p("toy6.arff"), "--method", "mlros", "--out",
                          p("envseed")});
  ::unsetenv(kSeedEnvVar);
  ASSERT_EQ(rc, kExitOk) << err_.str();
  const Json manifest = Json::parse(read_text_file(p("envseed.manifest.json")));
  EXPECT_EQ(manifest["seed"], 13);
}

TEST_F(CliTest, PartitionWritesFolds) {
  std::vector<mlbalance::testing::Row> rows;
  for (int i = 0; i < 100; ++i) {
    rows.push_back({{double(i)}, {std::size_t(i % 4 == 0 ? 1 : 0)}});
  }
  save_mulan(mlbalance::testing::make_dataset(2, rows), p("h.arff"), p("h.xml"));
  ASSERT_EQ(run_cli({"partition", p("h.arff"), "--folds", "10", "--seed", "3",
                     "--out-dir", p("parts")}),
            kExitOk)
      << err_.str();
  std::size_t total = 0;
  for (int f = 0; f < 10; ++f) {
    const std::string base = p("parts/h-fold" + std::to_string(f));
    const auto test = load_mulan(base + "-test.arff", base + "-test.xml");
    const auto train = load_mulan(base + "-train.arff", base + "-train.xml");
    EXPECT_EQ(test.num_instances(), 10u);
    EXPECT_EQ(train.num_instances(), 90u);
    total += test.num_instances();
  }
  EXPECT_EQ(total, 100u);
  EXPECT_TRUE(fs::exists(p("parts/assignment.csv")));
}

TEST_F(CliTest, EvaluateSeparableFixture) {
  std::vector<mlbalance::testing::Row> train;
  std::vector<mlbalance::testing::Row> test;
  for (int i = 0; i < 20; ++i) {
    const double e = 0.01 * i;
    train.push_back({{e, e}, {0}});
    train.push_back({{9.0 + e, 9.0 - e}, {1}});
    if (i % 4 == 0) {
      test.push_back({{e + 0.005, e}, {0}});
      test.push_back({{9.0 - e, 9.0 + e}, {1}});
    }
  }
  save_mulan(mlbalance::testing::make_dataset(2, train), p("tr.arff"), p("tr.xml"));
  save_mulan(mlbalance::testing::make_dataset(2, test), p("te.arff"), p("te.xml"));
  ASSERT_EQ(run_cli({"evaluate", "--train", p("tr.arff"), "--test", p("te.arff"),
                     "--k", "3", "--seed", "0", "--out", p("ev.json")}),
            kExitOk)
      << err_.str();
  const Json j = Json::parse(read_text_file(p("ev.json")));
  EXPECT_EQ(j["hamming_loss"], 0.0);
  for (const char* key :
       {"hamming_loss", "ranking_loss", "precision", "recall", "f_measure", "auc"}) {
    EXPECT_GE(j[key].get<double>(), 0.0);
    EXPECT_LE(j[key].get<double>(), 1.0);
  }
}

TEST_F(CliTest, Concurrence) {
  ASSERT_EQ(run_cli({"concurrence", p("toy6.arff"), "--top", "1"}), kExitOk);
  EXPECT_EQ(out_.str(), "label_a,label_b,count,irlbl_a,irlbl_b\nA,C,1,1,5\n");
  ASSERT_EQ(run_cli({"concurrence", p("toy6.arff"), "--top", "0"}), kExitOk);
  EXPECT_EQ(out_.str(), "label_a,label_b,count,irlbl_a,irlbl_b\n");
  EXPECT_EQ(run_cli({"concurrence", p("toy6.arff"), "--top", "4"}),
            kExitParameterError);
}

TEST_F(CliTest, ReplayReproducesOutputs) {
  ASSERT_EQ(run_cli({"resample", p("toy6.arff"), "--method", "mlsmote", "--k", "1",
                     "--remedial", "mean", "--seed", "5", "--out", p("rep")}),
            kExitOk);
  const std::string first = read_text_file(p("rep.arff"));
  const std::string report = read_text_file(p("rep.report.json"));
  fs::remove(p("rep.arff"));
  ASSERT_EQ(run_cli({"replay", p("rep.manifest.json")}), kExitOk) << err_.str();
  EXPECT_EQ(read_text_file(p("rep.arff")), first);
  EXPECT_EQ(read_text_file(p("rep.report.json")), report);
}

TEST_F(CliTest, ReplayRejectsBrokenManifest) {
  write_text_file(p("m.json"), "{not json");
  EXPECT_EQ(run_cli({"replay", p("m.json")}), kExitInputError);
  write_text_file(p("m.json"), "{\"argv\": [\"replay\", \"m.json\"]}");
  EXPECT_EQ(run_cli({"replay", p("m.json")}), kExitParameterError);
}

TEST_F(CliTest, HelpAndVersionSucceed) {
  EXPECT_EQ(run_cli({"--help"}), kExitOk);
  EXPECT_EQ(run_cli({"--version"}), kExitOk);
  EXPECT_NE(out_.str().find(kToolVersion), std::string::npos);
}

}  // namespace
}  // namespace mlbalance::cli

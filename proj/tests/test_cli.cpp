// Copyright 2026 The Retro Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "retro/cli.hpp"
#include "retro/problems.hpp"

using namespace retro;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

}  // namespace

TEST(Cli, AnalyzeDeutsch) {
  const CliRun r = run({"analyze", "--problem", "deutsch", "--setting", "01"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "| 01 | {00,01} | 2 | 0.5 |"));
  EXPECT_TRUE(has(r.out, "| 01 | {01,10} |"));
  EXPECT_TRUE(has(r.out, "| 01 | {01,11} |"));
  EXPECT_TRUE(has(r.out, "| predicted queries | 1 |"));
  EXPECT_TRUE(has(r.out, "Aggregation: minimax"));
  EXPECT_TRUE(has(r.out, "| version | "));
}

TEST(Cli, AnalyzeSimon) {
  const CliRun r = run({"analyze", "--problem", "simon", "--n", "2", "--setting", "0011"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "| 0011 | {0011,0110} | 2 | 0.6131471928 | 0.5849625007 |"));
  EXPECT_TRUE(has(r.out, "| 0011 | {0011,1001} |"));
  EXPECT_TRUE(has(r.out, "further pairs omitted"));
}

TEST(Cli, Errors) {
  EXPECT_EQ(run({"analyze", "--problem", "deutsch", "--setting", "99"}).code, 1);
  EXPECT_EQ(run({"simulate", "--circuit", "nosuch"}).code, 1);
  EXPECT_EQ(run({"infer-r", "--n-min", "3", "--n-max", "3"}).code, 1);
  EXPECT_EQ(run({"predict", "--problem", "deutsch", "--r", "0"}).code, 1);
  EXPECT_EQ(run({"analyze"}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"analyze", "--problem", "deutsch", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, StrictNoValidSharing) {
  const std::vector<std::string> base = {"predict", "--problem", "deutsch", "--r", "0.9"};
  const CliRun soft = run(base);
  EXPECT_EQ(soft.code, 0);
  EXPECT_TRUE(has(soft.out, "none: no valid sharing"));
  std::vector<std::string> strict = base;
  strict.push_back("--strict");
  const CliRun hard = run(strict);
  EXPECT_EQ(hard.code, 1);
  EXPECT_TRUE(has(hard.err, "no valid sharing"));
}

TEST(Cli, Predict) {
  EXPECT_TRUE(has(run({"predict", "--problem", "dj", "--n", "2", "--r", "0.5"}).out, "| predicted queries | 1 |"));
  const CliRun g = run({"predict", "--problem", "grover", "--n", "4", "--r", "0.5"});
  EXPECT_TRUE(has(g.out, "| predicted queries | 3 |"));
  EXPECT_TRUE(has(g.out, "| optimal K | 3 |"));
  EXPECT_TRUE(has(run({"predict", "--problem", "grover", "--n", "4", "--r", "1.0"}).out, "| predicted queries | 0 |"));
}

TEST(Cli, InferR) {
  EXPECT_TRUE(has(run({"infer-r", "--n-min", "2", "--n-max", "2"}).out, "| 2 | 1 | 0.5 |"));
  EXPECT_TRUE(has(run({"infer-r", "--n-min", "6", "--n-max", "6"}).out, "| 6 | 6 | 0.532"));
}

TEST(Cli, Simulate) {
  const CliRun r = run({"simulate", "--circuit", "deutsch", "--setting", "01", "--check-states"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* label : {"(ina)", "(outa)", "(alice)", "(outb)"}) {
    EXPECT_TRUE(has(r.out, std::string("| ") + label + " |")) << label;
  }
  EXPECT_FALSE(has(r.out, "FAIL"));
  const CliRun s = run({"simulate", "--circuit", "simon2", "--setting", "0011"});
  EXPECT_TRUE(has(s.out, "| 0011 | 01 | 01:1 | yes | yes |"));
  const CliRun m = run({"simulate", "--circuit", "deutsch", "--measure", "B@0=10", "--measure", "A"});
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_TRUE(has(m.out, "| 1 | B@0=10 | {10,11} | 0.5 |"));
  EXPECT_TRUE(has(m.out, "| 2 | A |"));
  EXPECT_EQ(run({"simulate", "--circuit", "deutsch", "--measure", "C"}).code, 1);
  EXPECT_EQ(run({"simulate", "--circuit", "deutsch", "--setting", "01", "--measure", "B=00"}).code, 1);
}

TEST(Cli, Histories) {
  const CliRun r = run({"histories", "--circuit", "grover2", "--setting", "01"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "| 11 | {01,11} |"));
  EXPECT_TRUE(has(r.out, "| unjustified histories | 0 |"));
  EXPECT_FALSE(has(r.out, "UNJUSTIFIED"));
}

TEST(Cli, CsvAndOutFile) {
  const CliRun r = run({"predict", "--problem", "deutsch", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "section,row,column,value\r\n"));
  EXPECT_TRUE(has(r.out, "prediction,1,value,1\r\n"));
  const auto path = std::filesystem::temp_directory_path() / "retro_cli_test.md";
  const CliRun f = run({"infer-r", "--out", path.string()});
  EXPECT_EQ(f.code, 0);
  EXPECT_TRUE(f.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_TRUE(has(ss.str(), "# infer-r"));
  std::filesystem::remove(path);
}

TEST(Cli, ProblemFile) {
  const auto path = std::filesystem::temp_directory_path() / "retro_cli_problem.json";
  save_problem(gen_deutsch(), path.string());
  const CliRun a = run({"analyze", "--file", path.string(), "--setting", "01"});
  const CliRun b = run({"analyze", "--problem", "deutsch", "--setting", "01"});
  ASSERT_EQ(a.code, 0) << a.err;
  // Only the command echo differs.
  EXPECT_EQ(a.out.substr(a.out.find("| version")), b.out.substr(b.out.find("| version")));
  std::filesystem::remove(path);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"simulate", "--circuit", "grover2", "--measure", "A", "--seed", "5"};
  EXPECT_EQ(run(args).out, run(args).out);
}

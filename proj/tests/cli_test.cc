// Copyright 2026 The RankLab Authors.
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

#include "cli.h"

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "ranklab/io.h"

namespace ranklab::cli {
namespace {

using nlohmann::json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string Temp(const std::string& name, const std::string& contents) {
  const std::string path = ::testing::TempDir() + name;
  WriteFile(path, contents);
  return path;
}

const char kOrder123[] = R"({"n":3,"m":1,"matrices":[[[0,1,1],[0,0,1],[0,0,0]]]})";
const char kCycle[] =
    R"({"n":3,"m":3,"matrices":[[[0,1,1],[0,0,1],[0,0,0]],[[0,0,0],[1,0,1],[1,0,0]],[[0,1,0],[0,0,0],[1,1,0]]]})";

TEST(CliTest, ScoreBorda) {
  const std::string p = Temp("order.json", kOrder123);
  const CliRun r = Cli({"score", "--method", "borda", "--input", p});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"scores\":[2,0,-2]}\n");
}

TEST(CliTest, ScoreGrsEqualsBorda) {
  const std::string p = Temp("order.json", kOrder123);
  const CliRun r = Cli({"score", "--method", "grs", "--eps", "0.5", "--input", p});
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  ASSERT_EQ(j["scores"].size(), 3u);
  EXPECT_NEAR(j["scores"][0].get<double>(), 2.0, 1e-12);
  EXPECT_NEAR(j["scores"][1].get<double>(), 0.0, 1e-12);
  EXPECT_NEAR(j["scores"][2].get<double>(), -2.0, 1e-12);
}

TEST(CliTest, ScoreFromStdinAndCsv) {
  EXPECT_EQ(Cli({"score", "--method", "borda"}, kOrder123).out, "{\"scores\":[2,0,-2]}\n");
  const std::string a = Temp("a.csv", "0,1\n0,0\n");
  const std::string b = Temp("b.csv", "0,0.25\n0.75,0\n");
  const CliRun r = Cli({"score", "--input", a, "--input", b, "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "alternative,score\n1,0.5\n2,-0.5\n");
}

TEST(CliTest, ZermeloFordFailure) {
  const std::string p = Temp("order.json", kOrder123);
  const CliRun r = Cli({"score", "--method", "zermelo", "--input", p});
  EXPECT_EQ(r.code, kExitSolver);
  EXPECT_EQ(json::parse(r.err)["error"]["code"], "FORD_CONDITION");
}

TEST(CliTest, ValidationErrors) {
  const std::string bad = Temp("bad.json", R"({"n":2,"m":1,"matrices":[[[0,0.6],[0.3,0]]]})");
  CliRun r = Cli({"score", "--input", bad});
  EXPECT_EQ(r.code, kExitValidation);
  const json e = json::parse(r.err)["error"];
  EXPECT_EQ(e["code"], "COMPLEMENTARITY_VIOLATION");
  EXPECT_EQ(e["where"], json::array({1, 1, 2}));
  EXPECT_EQ(Cli({"score", "--method", "nope"}, kOrder123).code, kExitValidation);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitValidation);
  EXPECT_EQ(Cli({"score", "--input", "/nonexistent/p.json"}).code, kExitValidation);
  EXPECT_EQ(Cli({"--help"}).code, 0);
}

TEST(CliTest, Residual) {
  const std::string p = Temp("two.json", R"({"n":2,"m":1,"matrices":[[[0,0.75],[0.25,0]]]})");
  const std::string s = Temp("s.json", R"({"scores":[0.75,0.25]})");
  const CliRun r = Cli({"residual", "--method", "zermelo", "--input", p, "--scores", s});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"max_abs\":0,\"residual\":[0,0]}\n");
  const std::string zero = Temp("z.json", R"({"scores":[0,0.5]})");
  const CliRun d = Cli({"residual", "--method", "cowden", "--input", p, "--scores", zero});
  EXPECT_EQ(d.code, kExitValidation);
  EXPECT_EQ(json::parse(d.err)["error"]["code"], "DOMAIN_VIOLATION");
}

TEST(CliTest, CheckBordaPasses) {
  const std::string report = ::testing::TempDir() + "check_report.json";
  const CliRun r = Cli({"check", "--axiom", "self-consistency", "--method", "borda", "--trials", "1000", "--seed", "7",
                     "--out", report});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out)["passed"].get<bool>());
  const json rep = json::parse(ReadFile(report));
  EXPECT_EQ(rep["exit_code"], 0);
  EXPECT_EQ(rep["command"][0], "check");
  EXPECT_EQ(rep["config_hash"].get<std::string>().size(), 16u);
}

TEST(CliTest, CheckExternalConstantZeroFails) {
  const std::string report = ::testing::TempDir() + "zero_report.json";
  const CliRun r = Cli({"check", "--axiom", "self-consistency", "--exec", RANKLAB_CONSTANT_ZERO, "--trials", "100",
                     "--seed", "7", "--out", report});
  EXPECT_EQ(r.code, kExitViolations);
  const json rep = json::parse(ReadFile(report));
  EXPECT_GT(rep["results"]["violating_trials"].get<int>(), 0);
  const json& v = rep["results"]["violations"][0];
  EXPECT_EQ(v["profiles"].size(), 2u);
  EXPECT_TRUE(v.contains("majorization"));
}

TEST(CliTest, CheckMalformedExternalOutput) {
  const CliRun r = Cli({"check", "--exec", "echo nonsense", "--trials", "3"});
  EXPECT_EQ(r.code, kExitProtocol);
  EXPECT_EQ(json::parse(r.err)["error"]["code"], "PROTOCOL_ERROR");
}

TEST(CliTest, CheckAllAxioms) {
  const CliRun r = Cli({"check", "--axiom", "all", "--method", "borda", "--trials", "50", "--threads", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["checks"].size(), 7u);
  EXPECT_EQ(Cli({"check", "--axiom", "monotonicity", "--method", "reversed-borda", "--trials", "50"}).code,
            kExitViolations);
  EXPECT_EQ(Cli({"check", "--axiom", "faithfulness", "--method", "zermelo"}).code, kExitValidation);
}

TEST(CliTest, Kemeny) {
  const CliRun r = Cli({"kemeny"}, kCycle);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"distance\":8,\"medians\":[[1,2,3],[2,3,1],[3,1,2]]}\n");
  const CliRun big = Cli({"kemeny", "--cap", "2"}, kCycle);
  EXPECT_EQ(big.code, kExitValidation);
  EXPECT_EQ(json::parse(big.err)["error"]["code"], "TOO_LARGE");
}

TEST(CliTest, Choice) {
  const char two[] = R"({"n":3,"m":2,"matrices":[[[0,1,1],[0,0,1],[0,0,0]],[[0,0,1],[1,0,1],[0,0,0]]]})";
  EXPECT_EQ(Cli({"choice", "--method", "unanimity"}, two).out, "{\"choice\":[1,2]}\n");
  EXPECT_EQ(Cli({"choice"}, two).out, "{\"choice\":[1,2]}\n");
  EXPECT_EQ(Cli({"choice", "--ranking"}, kOrder123).out, "{\"choice\":[1],\"ranking\":[[1],[2],[3]]}\n");
}

TEST(CliTest, ToleranceFromEnvironment) {
  const char near[] = R"({"n":2,"m":1,"matrices":[[[0,0.5000001],[0.4999999,0]]]})";
  EXPECT_EQ(Cli({"choice"}, near).out, "{\"choice\":[1]}\n");
  ::setenv("RANKLAB_TOL", "1e-3", 1);
  EXPECT_EQ(Cli({"choice"}, near).out, "{\"choice\":[1,2]}\n");
  EXPECT_EQ(Cli({"choice", "--tol", "0"}, near).out, "{\"choice\":[1]}\n");
  ::setenv("RANKLAB_TOL", "abc", 1);
  EXPECT_EQ(Cli({"choice"}, near).code, kExitValidation);
  ::unsetenv("RANKLAB_TOL");
}

TEST(CliTest, Extend) {
  const std::string set = Temp("set.json", R"({"k":2,"points":[[0.5,-0.5],[-0.5,0.5]],"values":[0,0]})");
  const std::string q = Temp("q.json", "[[0.5,-0.5],[100,100]]");
  const CliRun r = Cli({"extend", "--set", set, "--queries", q});
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["values"][0], 0);
  EXPECT_GT(j["values"][1].get<double>(), 0.0);
  const std::string bad = Temp("bad_set.json", R"({"k":2,"points":[[0,0],[1,1]],"values":[0,0]})");
  const CliRun e = Cli({"extend", "--set", bad, "--queries", q});
  EXPECT_EQ(e.code, kExitValidation);
  EXPECT_EQ(json::parse(e.err)["error"]["code"], "NOT_PARETIAN");
}

TEST(CliTest, GenerateIsReproducible) {
  const CliRun a = Cli({"generate", "--mode", "crisp", "--seed", "5", "--count", "20"});
  const CliRun b = Cli({"generate", "--mode", "crisp", "--seed", "5", "--count", "20"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  std::istringstream lines(a.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    EXPECT_NO_THROW(ProfileFromJson(line));
    ++count;
  }
  EXPECT_EQ(count, 20);
  EXPECT_EQ(Cli({"generate", "--mode", "wobbly"}).code, kExitValidation);
}

TEST(CliTest, Compare) {
  const CliRun r = Cli({"compare", "--methods", "borda,grs,lsq,zermelo"}, kOrder123);
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  ASSERT_EQ(j["methods"].size(), 4u);
  EXPECT_EQ(j["methods"][0]["ranking"], json::parse("[[1],[2],[3]]"));
  EXPECT_EQ(j["methods"][3]["error"]["code"], "FORD_CONDITION");
  EXPECT_TRUE(j["rankings_agree"].get<bool>());
}

}  // namespace
}  // namespace ranklab::cli

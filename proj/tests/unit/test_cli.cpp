// Copyright 2026 The AGPPA Authors
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
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "agppa/problem_json.hpp"
#include "cli.hpp"

namespace agppa::cli {
namespace {

const std::string kFixtures = AGPPA_FIXTURE_DIR;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("agppa_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, SolveJsonFixture) {
  const CliRun r = run({"solve", kFixtures + "/one_d.json", "--epsilon", "1e-9", "--report",
                     path("r.json"), "--solution", path("s.json"), "--history", path("h.csv")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("status=Solved"), std::string::npos);
  const nlohmann::json rep = read_json_file(path("r.json"));
  EXPECT_EQ(rep["status"], "Solved");
  EXPECT_NEAR(rep["objective"].get<double>(), 1.0, 1e-6);
  EXPECT_LE(rep["residual"].get<double>(), 1e-9);
  const PrimalDualPoint z = point_from_json(read_json_file(path("s.json")));
  EXPECT_NEAR(z.x[0], 1.0, 1e-6);
  std::ifstream h(path("h.csv"));
  std::string header;
  std::getline(h, header);
  EXPECT_EQ(header, "step,stage,sigma,eta,residual,step_norm,wall_ms");
}

TEST_F(CliTest, SolveMpsReportsOriginalVariables) {
  const CliRun r = run({"solve", kFixtures + "/two_var.mps", "--epsilon", "1e-9", "--solution",
                     path("s.json"), "--report", path("r.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const nlohmann::json s = read_json_file(path("s.json"));
  EXPECT_NEAR(s["variables"]["X1"].get<double>(), 1.0, 1e-5);
  EXPECT_NEAR(s["variables"]["X2"].get<double>(), 0.5, 1e-5);
  EXPECT_NEAR(read_json_file(path("r.json"))["objective"].get<double>(), 5.0, 1e-5);
}

TEST_F(CliTest, SolveDualForm) {
  const CliRun r = run({"solve", kFixtures + "/one_d.mps", "--form", "dual", "--epsilon", "1e-9",
                     "--report", path("r.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const nlohmann::json rep = read_json_file(path("r.json"));
  EXPECT_EQ(rep["form"], "dual");
  EXPECT_NEAR(rep["objective"].get<double>(), 1.0, 1e-6);
}

TEST_F(CliTest, BudgetExhaustedExitCode) {
  const CliRun r = run({"solve", kFixtures + "/one_d.json", "--epsilon", "1e-14", "--max-steps", "1"});
  EXPECT_EQ(r.code, kExitBudget);
  EXPECT_NE(r.out.find("status=StageLimit"), std::string::npos);
}

TEST_F(CliTest, CheckExitCodes) {
  const CliRun ok = run({"check", kFixtures + "/one_d.json", kFixtures + "/one_d_opt.json"});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_NE(ok.out.find("E1 0.000000e+00"), std::string::npos);
  const CliRun bad = run({"check", kFixtures + "/one_d.json", kFixtures + "/one_d_zero.json"});
  EXPECT_EQ(bad.code, kExitCheckFailed);
  EXPECT_NE(bad.out.find("E1 1.414214e+00"), std::string::npos);
  EXPECT_NE(bad.out.find("E2 5.000000e-01"), std::string::npos);
  EXPECT_NE(bad.out.find("E3 1.000000e+00"), std::string::npos);
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(run({"solve", path("missing.mps")}).code, kExitInput);
  EXPECT_EQ(run({"solve", kFixtures + "/one_d.json", "--gamma", "2.5"}).code, kExitInput);
  EXPECT_EQ(run({"solve", kFixtures + "/one_d.json", "--inner", "bogus"}).code, kExitInput);
  EXPECT_EQ(run({"bogus"}).code, kExitInput);
  EXPECT_EQ(run({}).code, kExitInput);
  {
    std::ofstream o(path("bad.json"));
    o << "{\"x\": [1.0, 2.0], \"lambda\": [1.0]}";
  }
  EXPECT_EQ(run({"check", kFixtures + "/one_d.json", path("bad.json")}).code, kExitInput);
}

TEST_F(CliTest, GenerateIsReproducible) {
  ASSERT_EQ(run({"generate", "covering", "--m", "8", "--n", "12", "--density", "0.3", "--seed",
                 "5", "--out", path("a.json")})
                .code,
            kExitOk);
  ASSERT_EQ(run({"generate", "covering", "--m", "8", "--n", "12", "--density", "0.3", "--seed",
                 "5", "--out", path("b.json")})
                .code,
            kExitOk);
  EXPECT_EQ(read_json_file(path("a.json")), read_json_file(path("b.json")));
  const CliRun stdout_run = run({"generate", "mixed", "--m", "4", "--n", "3", "--n-b", "1"});
  ASSERT_EQ(stdout_run.code, kExitOk);
  const LpProblem p = problem_from_json(nlohmann::json::parse(stdout_run.out));
  EXPECT_EQ(p.n(), 3);
  EXPECT_EQ(p.n_b(), 1);
}

TEST_F(CliTest, GenerateThenSolveMps) {
  ASSERT_EQ(run({"generate", "mixed", "--m", "5", "--n", "4", "--n-b", "2", "--seed", "3", "--mps",
                 path("g.mps")})
                .code,
            kExitOk);
  const CliRun r = run({"solve", path("g.mps"), "--epsilon", "1e-7"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
}

TEST_F(CliTest, Version) {
  const CliRun r = run({"--version"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("agppa"), std::string::npos);
}

}  // namespace
}  // namespace agppa::cli

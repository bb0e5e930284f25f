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

#include "agppa/errors.hpp"
#include "agppa/report.hpp"

namespace agppa {
namespace {

TEST(Report, JsonFields) {
  SolveReport r;
  r.status = SolveStatus::kSolved;
  r.objective = 1.5;
  r.e2 = 1e-7;
  r.n_out = 12;
  r.constants.delta = 0.3;
  r.inner.newton_steps = 4;
  const nlohmann::json j = report_to_json(r);
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["status"], "Solved");
  EXPECT_EQ(j["objective"], 1.5);
  EXPECT_EQ(j["e2"], 1e-7);
  EXPECT_EQ(j["N_out"], 12);
  EXPECT_EQ(j["constants"]["delta"], 0.3);
  EXPECT_EQ(j["inner"]["newton_steps"], 4);
  EXPECT_TRUE(j.contains("timings"));
}

TEST(Report, HistoryCsv) {
  const std::vector<HistoryRow> rows{{0, 0, 0.5, 1e16, 2.0, 0.0, 0.0},
                                     {1, 0, 0.5, 1e16, 0.25, 1.5, 3.25}};
  std::istringstream in(history_to_csv(rows));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "step,stage,sigma,eta,residual,step_norm,wall_ms");
  std::getline(in, line);
  EXPECT_EQ(line, "0,0,0.5,10000000000000000,2,0,0.000");
  std::getline(in, line);
  EXPECT_EQ(line, "1,0,0.5,10000000000000000,0.25,1.5,3.250");
  EXPECT_FALSE(std::getline(in, line));
}

TEST(Report, AtomicWrite) {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "agppa_report_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "out.txt").string();
  write_file_atomic(path, "first");
  write_file_atomic(path, "second");
  std::ifstream in(path);
  std::string s;
  std::getline(in, s);
  EXPECT_EQ(s, "second");
  EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
  EXPECT_THROW(write_file_atomic((dir / "missing" / "x.txt").string(), "x"), InputError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace agppa

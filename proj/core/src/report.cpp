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

#include "agppa/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "agppa/errors.hpp"

namespace agppa {

nlohmann::json report_to_json(const SolveReport& r) {
  nlohmann::json inner = {{"iterations", r.inner.iterations},
                          {"hood_epochs", r.inner.hood_epochs},
                          {"newton_steps", r.inner.newton_steps},
                          {"cg_iterations", r.inner.cg_iterations},
                          {"line_search_failures", r.inner.line_search_failures},
                          {"fallbacks", r.inner.fallbacks},
                          {"work_units", r.inner.work}};
  nlohmann::json constants = {{"delta", r.constants.delta},
                              {"alpha", r.constants.alpha},
                              {"C", r.constants.c},
                              {"sigma0", r.constants.sigma0}};
  return {{"schema_version", kReportSchemaVersion},
          {"status", std::string(to_string(r.status))},
          {"objective", r.objective},
          {"e1", r.e1},
          {"e2", r.e2},
          {"e3", r.e3},
          {"residual", r.residual},
          {"N_out", r.n_out},
          {"sigma_out", r.sigma_out},
          {"eta_out", r.eta_out},
          {"s_out", r.s_out},
          {"total_steps", r.total_steps},
          {"violations", r.violations},
          {"constants", std::move(constants)},
          {"inner", std::move(inner)},
          {"timings", {{"wall_seconds", r.wall_seconds}, {"inner_seconds", r.inner_seconds}}}};
}

std::string history_to_csv(const std::vector<HistoryRow>& rows) {
  std::ostringstream out;
  out << "step,stage,sigma,eta,residual,step_norm,wall_ms\n";
  char buf[256];
  for (const HistoryRow& h : rows) {
    std::snprintf(buf, sizeof buf, "%lld,%d,%.17g,%.17g,%.17g,%.17g,%.3f\n", h.step, h.stage,
                  h.sigma, h.eta, h.residual, h.step_norm, h.wall_ms);
    out << buf;
  }
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw InputError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw InputError("cannot rename onto '" + path + "'");
  }
}

}  // namespace agppa

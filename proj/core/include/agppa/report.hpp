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

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "agppa/agppa.hpp"

namespace agppa {

inline constexpr int kReportSchemaVersion = 1;

// Report JSON as described by schemas/solve_report.schema.json. The point is
// written separately (see point_to_json) because it may be mapped back to
// another problem first.
nlohmann::json report_to_json(const SolveReport& report);

// Columns: step,stage,sigma,eta,residual,step_norm,wall_ms. Row 0 is the
// initial point.
std::string history_to_csv(const std::vector<HistoryRow>& rows);

// Writes to a sibling temporary file and renames it over path. Throws
// InputError on failure.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace agppa

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

#include <nlohmann/json.hpp>

#include "agppa/lp_problem.hpp"

namespace agppa {

inline constexpr int kProblemJsonVersion = 1;

// {"format": "agppa-lp", "version": 1, "n": .., "n_b": .., "c": [..],
//  "A_I": {"rows": m_I, "triplets": [[i, j, v], ..]}, "b_I": [..],
//  "A_E": {...}, "b_E": [..]}
nlohmann::json problem_to_json(const LpProblem& p);
// Throws InputError on schema violations.
LpProblem problem_from_json(const nlohmann::json& j);

// {"x": [..], "lambda": [..]}
nlohmann::json point_to_json(const PrimalDualPoint& z);
PrimalDualPoint point_from_json(const nlohmann::json& j);

// Reads and parses a JSON file; throws InputError on I/O or syntax errors.
nlohmann::json read_json_file(const std::string& path);

}  // namespace agppa

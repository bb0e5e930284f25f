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
#include <string_view>
#include <vector>

#include "agppa/errors.hpp"
#include "agppa/lp_problem.hpp"

namespace agppa {

enum class MpsErrorKind {
  kMalformedSection,
  kMalformedLine,
  kBadNumber,
  kUnknownRow,
  kUnknownColumn,
  kDuplicateEntry,
  kDuplicateName,
  kNoObjective,
  kNoColumns,
  kUnsupported,
};

std::string_view to_string(MpsErrorKind kind);

class MpsParseError : public InputError {
 public:
  MpsParseError(MpsErrorKind kind, int line, const std::string& detail);

  MpsErrorKind kind() const { return kind_; }
  // 1-based; 0 when the error concerns the file as a whole.
  int line() const { return line_; }

 private:
  MpsErrorKind kind_;
  int line_;
};

// Original variable j equals shift[j] + sign[j] * x[index[j]], where x is
// the variable vector of the parsed LpProblem.
struct VariableMap {
  std::vector<std::string> names;
  std::vector<int> index;
  std::vector<double> sign;
  std::vector<double> shift;

  std::vector<double> to_original(const std::vector<double>& x) const;
};

struct MpsModel {
  std::string name;
  LpProblem problem;
  VariableMap variables;
  // Constant added to c^T x to obtain the objective of the file.
  double objective_offset = 0.0;
};

enum class MpsFormat {
  kFree,   // whitespace separated; names without blanks
  kFixed,  // column positions 2-3, 5-12, 15-22, 25-36, 40-47, 50-61
};

// Bounds map into the general form as follows: lower l finite becomes
// x = l + x' with x' >= 0 and, if the upper bound u is finite, an extra
// inequality row x' <= u - l; l = -inf with u finite becomes x = u - x';
// FR (or MI without an upper bound) makes the variable free. Sign-constrained
// variables are ordered first. L and G rows, then bound rows, form A_I; G rows
// are negated. Integer markers, integer bound types and RANGES are rejected.
MpsModel mps_parse(std::string_view text, MpsFormat format = MpsFormat::kFree);
MpsModel mps_read_file(const std::string& path, MpsFormat format = MpsFormat::kFree);

// Free-format MPS with 17 significant digits. The first n_b variables get
// default bounds and the rest are FR, so mps_parse(mps_write(p)).problem == p.
std::string mps_write(const LpProblem& p, std::string_view name = "AGPPA");

}  // namespace agppa

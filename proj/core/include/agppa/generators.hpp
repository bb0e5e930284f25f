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

#include <cstdint>
#include <string>
#include <vector>

#include "agppa/lp_problem.hpp"

namespace agppa {

// A point x0 with A_I x0 < b_I, A_E x0 = b_E and x0 >= 0 on the first n_b
// entries, and a multiplier lambda0 (nonnegative on the first m_I entries)
// with A^T lambda0 + c >= 0 on the first n_b entries and = 0 elsewhere.
struct GeneratorCertificate {
  std::vector<double> x0;
  std::vector<double> lambda0;
};

// A = 100 (U - 0.5) on a uniformly drawn pattern of about density*m*n
// entries (empty rows get one extra entry); b = A x0 + s with x0 ~ N(0, 1)
// and s ~ U[0.1, 1.1]; c = -A^T lambda0 with lambda0 sparse and
// nonnegative. All variables free, inequality rows only.
LpProblem gen_random_sparse_lp(int m, int n, double density, std::uint64_t seed,
                               GeneratorCertificate* cert = nullptr);

// 0/1 matrix from rounding U(0,1) values on a random pattern, every row
// nonempty; c ~ U(0, 1]; encoded as -A x <= -e with x >= 0.
LpProblem gen_covering_lp(int m, int n, double density, std::uint64_t seed);

// Small bounded, feasible LP with both sign-constrained and free variables
// and optional equality rows. Entries are U[-1, 1]; a strictly feasible x0
// and a dual-feasible lambda0 are built in.
LpProblem gen_mixed_lp(int n, int m_ineq, int m_eq, int n_b, std::uint64_t seed,
                       GeneratorCertificate* cert = nullptr);

enum class SvmNormalization { kNone, kDense, kSparse };

// Each sample made zero-mean and unit-norm across its features (dense), or
// scaled to unit norm (sparse). Zero vectors are left unchanged.
void normalize_samples(std::vector<std::vector<double>>& samples, SvmNormalization mode);

// Multi-class L1-regularized SVM as an LP. Labels are 1..k with k >= 2.
// Variables: w+ (k p_d), w- (k p_d), xi (p_n), all nonnegative. For every
// sample i and class j != y_i:  -(w_{y_i} - w_j)^T x_i - xi_i <= -1.
// Objective: penalty * sum(w+ + w-) + sum(xi).
LpProblem l1svm_to_lp(const std::vector<std::vector<double>>& samples,
                      const std::vector<int>& labels, double penalty = 1.0);

struct SvmData {
  std::vector<std::vector<double>> samples;
  std::vector<int> labels;
};

// CSV rows "label,feature_1,...,feature_p"; blank lines and lines starting
// with '#' are skipped. Throws InputError.
SvmData read_svm_csv(const std::string& path);

}  // namespace agppa

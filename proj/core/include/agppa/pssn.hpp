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

#include <limits>
#include <optional>
#include <vector>

#include "agppa/inner_problem.hpp"

namespace agppa {

struct PssnConfig {
  double mu = 1e-4;   // Armijo constant, in (0, 1/2)
  double nu = 0.5;    // relative CG tolerance, in (0, 1)
  double rho = 0.5;   // backtracking factor, in (0, 1)
  double tau = 0.5;   // CG tolerance exponent, in (0, 1]
  int max_newton_steps = 500;
  // 0 means 10 times the size of the active set.
  int max_cg_iterations = 0;
  int max_halvings = 60;

  // Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

struct PssnStats {
  int newton_steps = 0;
  long long cg_iterations = 0;
  int line_search_failures = 0;
  int gradient_fallbacks = 0;
};

enum class PssnStatus { kConverged, kBudgetExhausted };

struct PssnResult {
  PssnStatus status = PssnStatus::kBudgetExhausted;
  // Last iterate; F is nonincreasing along iterates so it is also the best.
  std::vector<double> x;
  double work = 0.0;
  PssnStats stats;
};

// Generalized Hessian of f + ||x - x_bar||^2 / (2 sigma) at the point with
// A x = ax, restricted to the coordinates where active[i] is true:
//   H v = sigma A^T D A v + v / sigma,
// with D_jj = 0 iff j < m_I and the unclipped multiplier
// lambda_bar_j + sigma (A x - b)_j is negative.
class GeneralizedHessian {
 public:
  GeneralizedHessian(const InnerInstance& inst, const std::vector<double>& ax,
                     std::vector<bool> active);

  void apply(const std::vector<double>& v, std::vector<double>& out) const;
  const std::vector<double>& diagonal_d() const { return d_; }

 private:
  const InnerInstance* inst_;
  std::vector<double> d_;
  std::vector<bool> active_;
  mutable std::vector<double> tmp_v_;
  mutable std::vector<double> tmp_m_;
};

// Projected semismooth Newton with CG and Armijo backtracking. The budget is
// in nnz(A) work units; each Newton step charges (CG iterations + 2).
PssnResult pssn_solve(const InnerInstance& inst, double eta, double delta,
                      const PssnConfig& cfg = {},
                      std::optional<std::vector<double>> start = std::nullopt,
                      double budget = std::numeric_limits<double>::infinity());

}  // namespace agppa

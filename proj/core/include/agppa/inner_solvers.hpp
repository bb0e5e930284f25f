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

#include <chrono>
#include <optional>
#include <string_view>
#include <vector>

#include "agppa/hood.hpp"
#include "agppa/inner_problem.hpp"
#include "agppa/pssn.hpp"

namespace agppa {

enum class InnerMode { kHybrid, kFirstOrderOnly, kPssnOnly };

std::string_view to_string(InnerMode mode);
// "hybrid", "first_order_only", "pssn_only"; throws std::invalid_argument.
InnerMode parse_inner_mode(std::string_view text);

using Clock = std::chrono::steady_clock;

struct InnerConfig {
  InnerMode mode = InnerMode::kHybrid;
  HoodConfig hood;
  PssnConfig pssn;
  // Budget multiplier c_J of the hybrid solver.
  double c_j = 10.0;
  long long max_iterations = 1'000'000;
  // Checked between iterations only.
  std::optional<Clock::time_point> deadline;
};

enum class InnerStatus { kSatisfied, kIterationCap, kTimeLimit };

std::string_view to_string(InnerStatus status);

struct InnerStats {
  long long iterations = 0;  // first-order loop iterations
  long long hood_epochs = 0;
  long long newton_steps = 0;
  long long cg_iterations = 0;
  long long line_search_failures = 0;
  long long fallbacks = 0;   // hybrid runs that switched to the first-order loop
  double work = 0.0;         // nnz(A) units

  InnerStats& operator+=(const InnerStats& o);
};

struct InnerResult {
  InnerStatus status = InnerStatus::kIterationCap;
  // Sign-feasible; for kSatisfied it passes stopping_check(eta, delta).
  std::vector<double> x;
  InnerStats stats;
};

// First-order loop: x^0 = G_F(start), start defaulting to x_bar; then
// y' = HOOD(x^k), kept only if F does not increase, and x^{k+1} = G_F(y').
InnerResult algorithm2_solve(const InnerInstance& inst, double eta, double delta,
                             const InnerConfig& cfg,
                             std::optional<std::vector<double>> start = std::nullopt);

// ln zeta_2(L sigma) with zeta_2(q) = 2 (1 + delta)^2 q^2 / delta^2.
double log_zeta2(double l_sigma, double delta);
// c_J * ceil(max(ln zeta_2(L sigma), 1)) in units of first-order iterations.
double hybrid_budget_epochs(const InnerInstance& inst, double delta, double c_j);

// PSSN under the budget above, then the first-order loop from PSSN's last
// point if the criterion is still unmet. With a zero budget PSSN is skipped.
InnerResult hybrid_solve(const InnerInstance& inst, double eta, double delta,
                         const InnerConfig& cfg);

InnerResult pssn_only_solve(const InnerInstance& inst, double eta, double delta,
                            const InnerConfig& cfg);

InnerResult inner_solve(const InnerInstance& inst, double eta, double delta,
                        const InnerConfig& cfg);

}  // namespace agppa

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

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "agppa/inner_solvers.hpp"
#include "agppa/lp_problem.hpp"

namespace agppa {

struct AgppaParams {
  double gamma = 1.0;        // relaxation, in (0, 2)
  double rho = 0.7;          // target linear rate, in (0, 1)
  double rho_delta = 0.9;    // in (0, 1)
  double rho_eta = 0.9;      // in (0, 1)
  double rho_sigma = 5.0;    // > 1
  double varsigma = 1.1;     // > 1
  double eta0 = 1e16;        // > 0
  double epsilon = 1e-6;     // target residual
  ResidualKind residual_kind = ResidualKind::kE2;

  // Overrides of the derived quantities; sigma0_scale multiplies sigma_0.
  std::optional<double> delta;
  std::optional<double> sigma0;
  double sigma0_scale = 1.0;

  double max_time_seconds = 3600.0;
  int max_stages = 200;
  long long max_steps = 100000;
  // Test E(z^{s,t}) before computing z^{s,t+1} instead of after.
  bool check_residual_first = false;

  // Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

struct DerivedConstants {
  double delta = 0.0;
  double alpha = 0.0;
  double c = 0.0;
  double sigma0 = 0.0;
};

// (1/(1-delta)) (sqrt(1 - k alpha^2/(alpha^2+1)) + delta (min(gamma,1)/sqrt(alpha^2+1) + 1))
// with k = min(gamma, 2 gamma - gamma^2). Strictly decreasing in alpha.
double rho_of(double alpha, double delta, double gamma);

// delta = rho_delta (rho - sqrt(1 - k)) / (1 + rho).
double default_delta(double rho, double rho_delta, double gamma);

// Root of rho_of(alpha; delta, gamma) = rho by log-scale bisection on
// [1e-8, 1e12]. Throws std::domain_error if the bracket does not contain it.
double solve_alpha(double rho, double delta, double gamma);

// C = (1 + delta) / ((1 - delta)(1 - 1/sqrt(alpha^2 + 1))).
double checking_constant(double alpha, double delta);

DerivedConstants derive_constants(const AgppaParams& params, double frobenius_norm);

// sigma_s = sigma_0 rho_sigma^s.
double sigma_schedule(double sigma0, double rho_sigma, int s);
// eta_{s,t} = eta_0 rho_eta^s (1 + t)^(-varsigma).
double eta_schedule(double eta0, double rho_eta, double varsigma, int s, long long t);

// history[j] = ||z^{s,j+1} - z^{s,j}|| for j < t; new_norm is the step at t.
// True iff new_norm > C min_{0<=j<=t} rho^(t-j) step_j, the j = t term being
// new_norm itself.
bool checking_condition(std::span<const double> history, double new_norm, double c, double rho);

struct IgppaStepResult {
  PrimalDualPoint z_next;
  PrimalDualPoint w;
  InnerResult inner;
};

// w = (x, Lambda(x)) with x an inexact minimizer of the inner objective
// around z, and z_next = gamma w + (1 - gamma) z.
IgppaStepResult igppa_step(const LpProblem& p, const ProblemNorms& norms, const PrimalDualPoint& z,
                           double sigma, double eta, double delta, double gamma,
                           const InnerConfig& inner);

enum class SolveStatus { kSolved, kTimeLimit, kStageLimit, kInnerFailure };

std::string_view to_string(SolveStatus status);

struct HistoryRow {
  long long step = 0;  // cumulative IGPPA steps; 0 is the initial point
  int stage = 0;
  double sigma = 0.0;
  double eta = 0.0;
  double residual = 0.0;
  double step_norm = 0.0;
  double wall_ms = 0.0;
};

struct StepEvent {
  int stage = 0;
  long long t = 0;
  double sigma = 0.0;
  double eta = 0.0;
  const PrimalDualPoint* z = nullptr;
  const PrimalDualPoint* z_next = nullptr;
  const PrimalDualPoint* w = nullptr;
  double step_norm = 0.0;
  bool violation = false;
  const InnerResult* inner = nullptr;
};

struct SolveReport {
  SolveStatus status = SolveStatus::kStageLimit;
  PrimalDualPoint z;
  double objective = 0.0;
  double e1 = 0.0;
  double e2 = 0.0;
  double e3 = 0.0;
  double residual = 0.0;  // of the selected kind
  long long n_out = 0;    // N-circ
  double sigma_out = 0.0;
  double eta_out = 0.0;
  int s_out = 0;
  long long total_steps = 0;
  int violations = 0;
  DerivedConstants constants;
  InnerStats inner;
  double wall_seconds = 0.0;
  double inner_seconds = 0.0;
  std::vector<HistoryRow> history;
};

struct RunOptions {
  std::optional<PrimalDualPoint> initial_point;
  std::function<void(const StepEvent&)> on_step;
};

// The adaptive outer loop. The initial point defaults to (0, 0); a supplied
// point is projected onto the sign constraints.
SolveReport agppa_run(const LpProblem& p, const AgppaParams& params, const InnerConfig& inner,
                      const RunOptions& options = {});

}  // namespace agppa

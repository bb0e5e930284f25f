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

#include "agppa/inner_solvers.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace agppa {
namespace {

// ln zeta_2 is unbounded as delta -> 0; the budget saturates here.
constexpr double kMaxLogZeta = 700.0;

bool past(const std::optional<Clock::time_point>& deadline) {
  return deadline && Clock::now() >= *deadline;
}

}  // namespace

std::string_view to_string(InnerMode mode) {
  switch (mode) {
    case InnerMode::kHybrid:
      return "hybrid";
    case InnerMode::kFirstOrderOnly:
      return "first_order_only";
    case InnerMode::kPssnOnly:
      return "pssn_only";
  }
  return "?";
}

InnerMode parse_inner_mode(std::string_view text) {
  if (text == "hybrid") return InnerMode::kHybrid;
  if (text == "first_order_only") return InnerMode::kFirstOrderOnly;
  if (text == "pssn_only") return InnerMode::kPssnOnly;
  throw std::invalid_argument("unknown inner solver '" + std::string(text) + "'");
}

std::string_view to_string(InnerStatus status) {
  switch (status) {
    case InnerStatus::kSatisfied:
      return "satisfied";
    case InnerStatus::kIterationCap:
      return "iteration_cap";
    case InnerStatus::kTimeLimit:
      return "time_limit";
  }
  return "?";
}

InnerStats& InnerStats::operator+=(const InnerStats& o) {
  iterations += o.iterations;
  hood_epochs += o.hood_epochs;
  newton_steps += o.newton_steps;
  cg_iterations += o.cg_iterations;
  line_search_failures += o.line_search_failures;
  fallbacks += o.fallbacks;
  work += o.work;
  return *this;
}

InnerResult algorithm2_solve(const InnerInstance& inst, double eta, double delta,
                             const InnerConfig& cfg, std::optional<std::vector<double>> start) {
  InnerResult res;
  Hood hood(inst, cfg.hood);
  InnerEval e = inst.evaluate(start ? *start : inst.x_bar());
  std::vector<double> x = inst.prox_grad_step(e);
  inst.evaluate(x, e);
  res.stats.work += 4.0;

  while (true) {
    if (inst.stopping_check(e, eta, delta)) {
      res.status = InnerStatus::kSatisfied;
      break;
    }
    if (res.stats.iterations >= cfg.max_iterations) {
      res.status = InnerStatus::kIterationCap;
      break;
    }
    if (past(cfg.deadline)) {
      res.status = InnerStatus::kTimeLimit;
      break;
    }
    HoodResult h = hood(x);
    ++res.stats.hood_epochs;
    res.stats.work += h.work;
    InnerEval ey = inst.evaluate(h.x);
    if (ey.big_f > e.big_f) inst.evaluate(x, ey);
    inst.prox_grad_step(ey, x);
    inst.evaluate(x, e);
    res.stats.work += 4.0;
    ++res.stats.iterations;
  }
  res.x = std::move(x);
  return res;
}

double log_zeta2(double l_sigma, double delta) {
  if (l_sigma <= 0.0) return -kMaxLogZeta;
  if (delta <= 0.0) return kMaxLogZeta;
  const double v = std::log(2.0) + 2.0 * std::log1p(delta) + 2.0 * std::log(l_sigma) -
                   2.0 * std::log(delta);
  return std::min(v, kMaxLogZeta);
}

double hybrid_budget_epochs(const InnerInstance& inst, double delta, double c_j) {
  const double l_sigma = inst.lipschitz() * inst.sigma();
  return c_j * std::ceil(std::max(log_zeta2(l_sigma, delta), 1.0));
}

InnerResult hybrid_solve(const InnerInstance& inst, double eta, double delta,
                         const InnerConfig& cfg) {
  const double epochs = hybrid_budget_epochs(inst, delta, cfg.c_j);
  if (epochs <= 0.0) return algorithm2_solve(inst, eta, delta, cfg);

  // One budget unit is one first-order iteration: a HOOD call plus the
  // proximal gradient step and the criterion evaluation.
  const double unit = Hood(inst, cfg.hood).epoch_cost() + 4.0;
  PssnConfig pcfg = cfg.pssn;
  PssnResult pr = pssn_solve(inst, eta, delta, pcfg, std::nullopt, epochs * unit);

  InnerResult res;
  res.stats.newton_steps = pr.stats.newton_steps;
  res.stats.cg_iterations = pr.stats.cg_iterations;
  res.stats.line_search_failures = pr.stats.line_search_failures;
  res.stats.work = pr.work;
  if (pr.status == PssnStatus::kConverged) {
    res.status = InnerStatus::kSatisfied;
    res.x = std::move(pr.x);
    return res;
  }
  ++res.stats.fallbacks;
  InnerResult fo = algorithm2_solve(inst, eta, delta, cfg, std::move(pr.x));
  res.stats += fo.stats;
  res.status = fo.status;
  res.x = std::move(fo.x);
  return res;
}

InnerResult pssn_only_solve(const InnerInstance& inst, double eta, double delta,
                            const InnerConfig& cfg) {
  PssnResult pr = pssn_solve(inst, eta, delta, cfg.pssn);
  InnerResult res;
  res.status =
      pr.status == PssnStatus::kConverged ? InnerStatus::kSatisfied : InnerStatus::kIterationCap;
  res.x = std::move(pr.x);
  res.stats.newton_steps = pr.stats.newton_steps;
  res.stats.cg_iterations = pr.stats.cg_iterations;
  res.stats.line_search_failures = pr.stats.line_search_failures;
  res.stats.work = pr.work;
  return res;
}

InnerResult inner_solve(const InnerInstance& inst, double eta, double delta,
                        const InnerConfig& cfg) {
  switch (cfg.mode) {
    case InnerMode::kHybrid:
      return hybrid_solve(inst, eta, delta, cfg);
    case InnerMode::kFirstOrderOnly:
      return algorithm2_solve(inst, eta, delta, cfg);
    case InnerMode::kPssnOnly:
      return pssn_only_solve(inst, eta, delta, cfg);
  }
  throw std::invalid_argument("unknown inner mode");
}

}  // namespace agppa

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

#include "agppa/pssn.hpp"

#include <cmath>
#include <stdexcept>

namespace agppa {
namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

void PssnConfig::validate() const {
  if (!(mu > 0.0 && mu < 0.5)) throw std::invalid_argument("PSSN mu must lie in (0, 1/2)");
  if (!(nu > 0.0 && nu < 1.0)) throw std::invalid_argument("PSSN nu must lie in (0, 1)");
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("PSSN rho must lie in (0, 1)");
  if (!(tau > 0.0 && tau <= 1.0)) throw std::invalid_argument("PSSN tau must lie in (0, 1]");
  if (max_newton_steps < 0 || max_cg_iterations < 0 || max_halvings < 0) {
    throw std::invalid_argument("PSSN iteration limits must be nonnegative");
  }
}

GeneralizedHessian::GeneralizedHessian(const InnerInstance& inst, const std::vector<double>& ax,
                                       std::vector<bool> active)
    : inst_(&inst), active_(std::move(active)) {
  const LpProblem& p = inst.problem();
  d_.assign(p.m(), 1.0);
  for (int j = 0; j < p.m_ineq(); ++j) {
    const double w = inst.lambda_bar()[j] + inst.sigma() * (ax[j] - p.b()[j]);
    if (w < 0.0) d_[j] = 0.0;
  }
  tmp_v_.resize(p.n());
  tmp_m_.resize(p.m());
}

void GeneralizedHessian::apply(const std::vector<double>& v, std::vector<double>& out) const {
  const LpProblem& p = inst_->problem();
  const double sigma = inst_->sigma();
  for (int i = 0; i < p.n(); ++i) tmp_v_[i] = active_[i] ? v[i] : 0.0;
  spmv(p.a(), tmp_v_, tmp_m_);
  for (int j = 0; j < p.m(); ++j) tmp_m_[j] *= d_[j];
  out.resize(p.n());
  spmv_t(p.a(), tmp_m_, out);
  for (int i = 0; i < p.n(); ++i) out[i] = active_[i] ? sigma * out[i] + tmp_v_[i] / sigma : 0.0;
}

PssnResult pssn_solve(const InnerInstance& inst, double eta, double delta, const PssnConfig& cfg,
                      std::optional<std::vector<double>> start, double budget) {
  cfg.validate();
  const LpProblem& p = inst.problem();
  const int n = p.n();
  const double sigma = inst.sigma();

  PssnResult res;
  std::vector<double> x = start ? std::move(*start) : inst.prox_grad_step(inst.x_bar());
  res.work = start ? 0.0 : 2.0;
  InnerEval e = inst.evaluate(x);
  InnerEval trial;
  std::vector<double> g(n);
  std::vector<double> y(n);
  std::vector<double> r(n);
  std::vector<double> dir(n);
  std::vector<double> hd(n);
  std::vector<double> xt(n);

  while (true) {
    if (inst.stopping_check(e, eta, delta)) {
      res.status = PssnStatus::kConverged;
      break;
    }
    if (res.stats.newton_steps >= cfg.max_newton_steps || res.work >= budget) {
      res.status = PssnStatus::kBudgetExhausted;
      break;
    }

    // Gradient of F on the free coordinates.
    std::vector<bool> active(n, true);
    int n_active = 0;
    for (int i = 0; i < n; ++i) {
      const double gi = e.grad[i] + (e.x[i] - inst.x_bar()[i]) / sigma;
      if (i < p.n_b() && e.x[i] == 0.0 && gi > 0.0) active[i] = false;
      g[i] = active[i] ? gi : 0.0;
      n_active += active[i] ? 1 : 0;
    }
    const double g_norm = std::sqrt(dot(g, g));
    if (g_norm == 0.0) {
      // Exact minimizer; the criterion can only fail when x is the base point.
      res.status = PssnStatus::kConverged;
      break;
    }

    GeneralizedHessian h(inst, e.ax, active);
    const double tol = std::min(cfg.nu * g_norm, std::pow(g_norm, 1.0 + cfg.tau));
    const int cg_cap = cfg.max_cg_iterations > 0 ? cfg.max_cg_iterations : 10 * n_active;
    std::fill(y.begin(), y.end(), 0.0);
    for (int i = 0; i < n; ++i) r[i] = -g[i];
    dir = r;
    double rr = dot(r, r);
    int cg = 0;
    while (std::sqrt(rr) > tol && cg < cg_cap) {
      h.apply(dir, hd);
      const double curv = dot(dir, hd);
      if (!(curv > 0.0)) break;
      const double alpha = rr / curv;
      for (int i = 0; i < n; ++i) {
        y[i] += alpha * dir[i];
        r[i] -= alpha * hd[i];
      }
      const double rr_new = dot(r, r);
      const double beta = rr_new / rr;
      rr = rr_new;
      for (int i = 0; i < n; ++i) dir[i] = r[i] + beta * dir[i];
      ++cg;
    }
    res.stats.cg_iterations += cg;
    double slope = dot(g, y);
    if (!(slope < 0.0)) {
      for (int i = 0; i < n; ++i) y[i] = -g[i];
      slope = -g_norm * g_norm;
    }

    double step = 1.0;
    bool accepted = false;
    for (int j = 0; j <= cfg.max_halvings; ++j) {
      for (int i = 0; i < n; ++i) {
        double v = x[i] + step * y[i];
        if (i < p.n_b()) v = std::max(v, 0.0);
        xt[i] = v;
      }
      inst.evaluate(xt, trial);
      if (trial.big_f <= e.big_f + cfg.mu * step * slope) {
        accepted = true;
        break;
      }
      step *= cfg.rho;
    }
    ++res.stats.newton_steps;
    res.work += cg + 2.0;

    if (!accepted) {
      ++res.stats.line_search_failures;
      ++res.stats.gradient_fallbacks;
      inst.prox_grad_step(e, xt);
      inst.evaluate(xt, trial);
      if (!(trial.big_f < e.big_f)) {
        res.status = PssnStatus::kBudgetExhausted;
        break;
      }
    }
    x = xt;
    std::swap(e, trial);
  }
  res.x = std::move(x);
  return res;
}

}  // namespace agppa

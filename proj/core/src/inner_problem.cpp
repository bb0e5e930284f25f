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

#include "agppa/inner_problem.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace agppa {

InnerInstance::InnerInstance(const LpProblem& p, const ProblemNorms& norms,
                             std::vector<double> x_bar, std::vector<double> lambda_bar,
                             double sigma)
    : p_(&p),
      norms_(&norms),
      x_bar_(std::move(x_bar)),
      lambda_bar_(std::move(lambda_bar)),
      sigma_(sigma),
      l_(sigma * norms.spectral * norms.spectral) {
  if (!(sigma > 0.0)) throw std::invalid_argument("InnerInstance: sigma must be positive");
  if (static_cast<int>(x_bar_.size()) != p.n() || static_cast<int>(lambda_bar_.size()) != p.m()) {
    throw std::invalid_argument("InnerInstance: base point dimensions differ from problem");
  }
  for (double v : lambda_bar_) lambda_bar_sq_ += v * v;
}

std::vector<double> InnerInstance::lambda_from_ax(std::span<const double> ax) const {
  const int m = p_->m();
  std::vector<double> lambda(m);
  for (int j = 0; j < m; ++j) {
    const double w = lambda_bar_[j] + sigma_ * (ax[j] - p_->b()[j]);
    lambda[j] = j < p_->m_ineq() ? std::max(w, 0.0) : w;
  }
  return lambda;
}

std::vector<double> InnerInstance::lambda_of(std::span<const double> x) const {
  return lambda_from_ax(spmv(p_->a(), x));
}

double InnerInstance::f_from(std::span<const double> x, std::span<const double> lambda) const {
  double sq = 0.0;
  for (double v : lambda) sq += v * v;
  return objective(*p_, x) + (sq - lambda_bar_sq_) / (2.0 * sigma_);
}

double InnerInstance::prox_term(std::span<const double> x) const {
  double sq = 0.0;
  for (int i = 0; i < n(); ++i) sq += (x[i] - x_bar_[i]) * (x[i] - x_bar_[i]);
  return sq / (2.0 * sigma_);
}

double InnerInstance::f_value(std::span<const double> x) const {
  return f_from(x, lambda_of(x));
}

double InnerInstance::big_f_value(std::span<const double> x) const {
  for (int i = 0; i < p_->n_b(); ++i) {
    if (x[i] < 0.0) return std::numeric_limits<double>::infinity();
  }
  return f_value(x) + prox_term(x);
}

std::vector<double> InnerInstance::grad_f(std::span<const double> x) const {
  return evaluate(x).grad;
}

InnerEval InnerInstance::evaluate(std::span<const double> x) const {
  InnerEval e;
  evaluate(x, e);
  return e;
}

void InnerInstance::evaluate(std::span<const double> x, InnerEval& e) const {
  const int m = p_->m();
  e.x.assign(x.begin(), x.end());
  e.ax.resize(m);
  spmv(p_->a(), x, e.ax);
  e.lambda.resize(m);
  for (int j = 0; j < m; ++j) {
    const double w = lambda_bar_[j] + sigma_ * (e.ax[j] - p_->b()[j]);
    e.lambda[j] = j < p_->m_ineq() ? std::max(w, 0.0) : w;
  }
  e.grad.resize(n());
  spmv_t(p_->a(), e.lambda, e.grad);
  for (int i = 0; i < n(); ++i) e.grad[i] += p_->c()[i];
  e.f = f_from(x, e.lambda);
  bool feasible = true;
  for (int i = 0; i < p_->n_b(); ++i) feasible = feasible && x[i] >= 0.0;
  e.big_f = feasible ? e.f + prox_term(x) : std::numeric_limits<double>::infinity();
}

double InnerInstance::subgrad_dist(const InnerEval& e) const {
  double sq = 0.0;
  for (int i = 0; i < n(); ++i) {
    double g = e.grad[i] + (e.x[i] - x_bar_[i]) / sigma_;
    if (i < p_->n_b() && e.x[i] == 0.0) g = std::min(g, 0.0);
    sq += g * g;
  }
  return std::sqrt(sq);
}

double InnerInstance::subgrad_dist(std::span<const double> x) const {
  return subgrad_dist(evaluate(x));
}

std::vector<double> InnerInstance::prox_grad_step(const InnerEval& e) const {
  std::vector<double> out;
  prox_grad_step(e, out);
  return out;
}

void InnerInstance::prox_grad_step(const InnerEval& e, std::vector<double>& out) const {
  out.resize(n());
  const double ls = l_ * sigma_;
  for (int i = 0; i < n(); ++i) {
    // L sigma (x - g/L) written as sigma (L x - g) so that L = 0 is harmless.
    double v = (sigma_ * (l_ * e.x[i] - e.grad[i]) + x_bar_[i]) / (ls + 1.0);
    if (i < p_->n_b()) v = std::max(v, 0.0);
    out[i] = v;
  }
}

std::vector<double> InnerInstance::prox_grad_step(std::span<const double> x) const {
  return prox_grad_step(evaluate(x));
}

double InnerInstance::base_distance(const InnerEval& e) const {
  double sq = 0.0;
  for (int i = 0; i < n(); ++i) sq += (e.x[i] - x_bar_[i]) * (e.x[i] - x_bar_[i]);
  for (int j = 0; j < p_->m(); ++j) {
    sq += (e.lambda[j] - lambda_bar_[j]) * (e.lambda[j] - lambda_bar_[j]);
  }
  return std::sqrt(sq);
}

bool InnerInstance::stopping_check(const InnerEval& e, double eta, double delta) const {
  const double rhs = std::min(eta, delta * base_distance(e)) / sigma_;
  return subgrad_dist(e) <= rhs;
}

bool InnerInstance::stopping_check(std::span<const double> x, double eta, double delta) const {
  return stopping_check(evaluate(x), eta, delta);
}

}  // namespace agppa

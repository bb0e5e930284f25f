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

#include <span>
#include <vector>

#include "agppa/lp_problem.hpp"

namespace agppa {

// f, Lambda(x) and grad f at one point, with the product A x kept for reuse.
struct InnerEval {
  std::vector<double> x;
  std::vector<double> ax;
  std::vector<double> lambda;
  std::vector<double> grad;
  double f = 0.0;
  double big_f = 0.0;
};

// The subproblem of one proximal step around (x_bar, lambda_bar):
//
//   Lambda(x) = [lambda_bar + sigma (A x - b)]_+^{m_I}
//   f(x)      = c^T x + (||Lambda(x)||^2 - ||lambda_bar||^2) / (2 sigma)
//   F(x)      = f(x) + ||x - x_bar||^2 / (2 sigma) + indicator(x_i >= 0, i < n_b)
//
// grad f = c + A^T Lambda is L-Lipschitz with L = sigma ||A||^2 and F is
// (1/sigma)-strongly convex.
class InnerInstance {
 public:
  // x_bar and lambda_bar must have problem dimensions; sigma > 0.
  InnerInstance(const LpProblem& p, const ProblemNorms& norms, std::vector<double> x_bar,
                std::vector<double> lambda_bar, double sigma);

  const LpProblem& problem() const { return *p_; }
  const ProblemNorms& norms() const { return *norms_; }
  const std::vector<double>& x_bar() const { return x_bar_; }
  const std::vector<double>& lambda_bar() const { return lambda_bar_; }
  double sigma() const { return sigma_; }
  double lipschitz() const { return l_; }
  double coordinate_lipschitz(int i) const { return sigma_ * norms_->column_sq[i]; }
  double mu() const { return 1.0 / sigma_; }
  int n() const { return p_->n(); }

  // Lambda from a precomputed A x.
  std::vector<double> lambda_from_ax(std::span<const double> ax) const;
  std::vector<double> lambda_of(std::span<const double> x) const;

  double f_value(std::span<const double> x) const;
  // +infinity when a sign constraint is violated.
  double big_f_value(std::span<const double> x) const;
  std::vector<double> grad_f(std::span<const double> x) const;

  InnerEval evaluate(std::span<const double> x) const;
  // Same, reusing the buffers of out.
  void evaluate(std::span<const double> x, InnerEval& out) const;
  // f given x and Lambda(x).
  double f_from(std::span<const double> x, std::span<const double> lambda) const;
  double prox_term(std::span<const double> x) const;

  // dist(0, dF(x)) for sign-feasible x.
  double subgrad_dist(std::span<const double> x) const;
  double subgrad_dist(const InnerEval& e) const;

  // G_F(x) = [(L sigma (x - grad f(x)/L) + x_bar) / (L sigma + 1)]_+^{n_b}.
  std::vector<double> prox_grad_step(std::span<const double> x) const;
  std::vector<double> prox_grad_step(const InnerEval& e) const;
  void prox_grad_step(const InnerEval& e, std::vector<double>& out) const;

  // ||(x, Lambda(x)) - (x_bar, lambda_bar)||.
  double base_distance(const InnerEval& e) const;

  bool stopping_check(std::span<const double> x, double eta, double delta) const;
  bool stopping_check(const InnerEval& e, double eta, double delta) const;

 private:
  const LpProblem* p_;
  const ProblemNorms* norms_;
  std::vector<double> x_bar_;
  std::vector<double> lambda_bar_;
  double sigma_;
  double l_;
  double lambda_bar_sq_ = 0.0;
};

}  // namespace agppa

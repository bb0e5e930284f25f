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

#include "agppa/lp_problem.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace agppa {

LpProblem::LpProblem(std::vector<double> c, SparseMatrix a_ineq, std::vector<double> b_ineq,
                     SparseMatrix a_eq, std::vector<double> b_eq, int n_b)
    : c_(std::move(c)),
      a_ineq_(std::move(a_ineq)),
      b_ineq_(std::move(b_ineq)),
      a_eq_(std::move(a_eq)),
      b_eq_(std::move(b_eq)),
      n_b_(n_b) {
  const int n = static_cast<int>(c_.size());
  if (a_ineq_.rows() > 0 && a_ineq_.cols() != n) {
    throw std::invalid_argument("LpProblem: A_I has " + std::to_string(a_ineq_.cols()) +
                                " columns, expected " + std::to_string(n));
  }
  if (a_eq_.rows() > 0 && a_eq_.cols() != n) {
    throw std::invalid_argument("LpProblem: A_E has " + std::to_string(a_eq_.cols()) +
                                " columns, expected " + std::to_string(n));
  }
  // Empty blocks may be given as 0x0; normalize them to 0 x n.
  if (a_ineq_.rows() == 0) a_ineq_ = SparseMatrix(0, n);
  if (a_eq_.rows() == 0) a_eq_ = SparseMatrix(0, n);
  if (static_cast<int>(b_ineq_.size()) != a_ineq_.rows()) {
    throw std::invalid_argument("LpProblem: b_I length does not match A_I rows");
  }
  if (static_cast<int>(b_eq_.size()) != a_eq_.rows()) {
    throw std::invalid_argument("LpProblem: b_E length does not match A_E rows");
  }
  if (n_b_ < 0 || n_b_ > n) throw std::invalid_argument("LpProblem: n_b outside [0, n]");
  a_ = SparseMatrix::VStack(a_ineq_, a_eq_);
  b_ = b_ineq_;
  b_.insert(b_.end(), b_eq_.begin(), b_eq_.end());
}

bool LpProblem::operator==(const LpProblem& other) const {
  return c_ == other.c_ && a_ineq_ == other.a_ineq_ && b_ineq_ == other.b_ineq_ &&
         a_eq_ == other.a_eq_ && b_eq_ == other.b_eq_ && n_b_ == other.n_b_;
}

PrimalDualPoint zero_point(const LpProblem& p) {
  return {std::vector<double>(p.n(), 0.0), std::vector<double>(p.m(), 0.0)};
}

void check_dimensions(const LpProblem& p, const PrimalDualPoint& z) {
  if (static_cast<int>(z.x.size()) != p.n() || static_cast<int>(z.lambda.size()) != p.m()) {
    throw std::invalid_argument("point dimensions (" + std::to_string(z.x.size()) + ", " +
                                std::to_string(z.lambda.size()) + ") do not match problem (" +
                                std::to_string(p.n()) + ", " + std::to_string(p.m()) + ")");
  }
}

void project_signs(const LpProblem& p, PrimalDualPoint& z) {
  check_dimensions(p, z);
  for (int i = 0; i < p.n_b(); ++i) z.x[i] = std::max(z.x[i], 0.0);
  for (int j = 0; j < p.m_ineq(); ++j) z.lambda[j] = std::max(z.lambda[j], 0.0);
}

bool signs_feasible(const LpProblem& p, const PrimalDualPoint& z) {
  for (int i = 0; i < p.n_b(); ++i) {
    if (z.x[i] < 0.0) return false;
  }
  for (int j = 0; j < p.m_ineq(); ++j) {
    if (z.lambda[j] < 0.0) return false;
  }
  return true;
}

double distance(const PrimalDualPoint& a, const PrimalDualPoint& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.x.size(); ++i) sum += (a.x[i] - b.x[i]) * (a.x[i] - b.x[i]);
  for (std::size_t j = 0; j < a.lambda.size(); ++j) {
    sum += (a.lambda[j] - b.lambda[j]) * (a.lambda[j] - b.lambda[j]);
  }
  return std::sqrt(sum);
}

double objective(const LpProblem& p, std::span<const double> x) {
  double v = 0.0;
  for (int i = 0; i < p.n(); ++i) v += p.c()[i] * x[i];
  return v;
}

ProblemNorms compute_norms(const LpProblem& p) {
  ProblemNorms norms;
  norms.spectral = spectral_norm_estimate(p.a());
  norms.frobenius = p.a().FrobeniusNorm();
  norms.column_sq = p.a().ColumnNormsSquared();
  for (double v : norms.column_sq) norms.max_column_sq = std::max(norms.max_column_sq, v);
  return norms;
}

}  // namespace agppa

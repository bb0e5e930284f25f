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
#include <string_view>
#include <vector>

#include "agppa/sparse_matrix.hpp"

namespace agppa {

// General-form LP
//
//   min  c^T x
//   s.t. A_I x <= b_I,  A_E x = b_E,  x_i >= 0 for i < n_b.
//
// The first n_b variables carry the sign constraint. The stacked matrix
// A = [A_I; A_E] and b = [b_I; b_E] are built once at construction.
class LpProblem {
 public:
  LpProblem() = default;
  // Throws std::invalid_argument when dimensions disagree or n_b is out of
  // range.
  LpProblem(std::vector<double> c, SparseMatrix a_ineq, std::vector<double> b_ineq,
            SparseMatrix a_eq, std::vector<double> b_eq, int n_b);

  int n() const { return static_cast<int>(c_.size()); }
  int n_b() const { return n_b_; }
  int m_ineq() const { return a_ineq_.rows(); }
  int m_eq() const { return a_eq_.rows(); }
  int m() const { return m_ineq() + m_eq(); }

  const std::vector<double>& c() const { return c_; }
  const SparseMatrix& a_ineq() const { return a_ineq_; }
  const std::vector<double>& b_ineq() const { return b_ineq_; }
  const SparseMatrix& a_eq() const { return a_eq_; }
  const std::vector<double>& b_eq() const { return b_eq_; }

  const SparseMatrix& a() const { return a_; }
  const std::vector<double>& b() const { return b_; }

  bool operator==(const LpProblem& other) const;

 private:
  std::vector<double> c_;
  SparseMatrix a_ineq_;
  std::vector<double> b_ineq_;
  SparseMatrix a_eq_;
  std::vector<double> b_eq_;
  int n_b_ = 0;
  SparseMatrix a_;
  std::vector<double> b_;
};

// z = (x, lambda), lambda = [lambda_I; lambda_E].
struct PrimalDualPoint {
  std::vector<double> x;
  std::vector<double> lambda;

  bool operator==(const PrimalDualPoint&) const = default;
};

PrimalDualPoint zero_point(const LpProblem& p);
// Clips x_i (i < n_b) and lambda_j (j < m_I) at zero.
void project_signs(const LpProblem& p, PrimalDualPoint& z);
bool signs_feasible(const LpProblem& p, const PrimalDualPoint& z);
void check_dimensions(const LpProblem& p, const PrimalDualPoint& z);

// Euclidean norm of the stacked difference (x - x', lambda - lambda').
double distance(const PrimalDualPoint& a, const PrimalDualPoint& b);

enum class ResidualKind { kE1, kE2, kE3 };

std::string_view to_string(ResidualKind kind);
// Accepts "e1"/"E1" etc. Throws std::invalid_argument otherwise.
ResidualKind parse_residual_kind(std::string_view text);

// The three KKT blocks shared by every residual:
//   gap     = c^T x + b^T lambda
//   dual    = [A^T lambda + c]_-^{n_b}   (negative part on the first n_b
//             entries, the remaining entries kept whole)
//   primal  = [A x - b]_+^{m_I}          (positive part on the first m_I
//             entries, equality rows kept whole)
struct KktBlocks {
  double ctx = 0.0;
  double btl = 0.0;
  std::vector<double> dual;
  std::vector<double> primal;

  double gap() const { return ctx + btl; }
};

KktBlocks kkt_blocks(const LpProblem& p, const PrimalDualPoint& z);
// Same, reusing precomputed products ax = A x and aty = A^T lambda.
KktBlocks kkt_blocks(const LpProblem& p, const PrimalDualPoint& z, std::span<const double> ax,
                     std::span<const double> aty);

double residual_e1(const KktBlocks& k);
double residual_e2(const LpProblem& p, const KktBlocks& k);
double residual_e3(const KktBlocks& k);
double residual(const LpProblem& p, const KktBlocks& k, ResidualKind kind);

double residual_e1(const LpProblem& p, const PrimalDualPoint& z);
double residual_e2(const LpProblem& p, const PrimalDualPoint& z);
double residual_e3(const LpProblem& p, const PrimalDualPoint& z);
double residual(const LpProblem& p, const PrimalDualPoint& z, ResidualKind kind);

double objective(const LpProblem& p, std::span<const double> x);

// Norm quantities of A used by step sizes and parameter defaults.
struct ProblemNorms {
  double spectral = 0.0;   // safety-factored power-iteration estimate of ||A||_2
  double frobenius = 0.0;  // exact ||A||_F
  std::vector<double> column_sq;  // exact ||a_i||^2 per column
  double max_column_sq = 0.0;
};

ProblemNorms compute_norms(const LpProblem& p);

// Recovers a primal-dual pair of the original problem from a pair of the
// problem actually solved (identity, or the dual written in general form).
class SolutionMap {
 public:
  enum class Kind { kIdentity, kDual };

  SolutionMap() = default;
  static SolutionMap Identity(int n, int m);
  static SolutionMap Dual(int n, int m);

  Kind kind() const { return kind_; }
  PrimalDualPoint to_original(const PrimalDualPoint& solved) const;
  PrimalDualPoint to_solved(const PrimalDualPoint& original) const;

 private:
  SolutionMap(Kind kind, int n, int m) : kind_(kind), n_(n), m_(m) {}
  Kind kind_ = Kind::kIdentity;
  int n_ = 0;
  int m_ = 0;
};

struct TransformedProblem {
  LpProblem problem;
  SolutionMap map;
};

// The dual of p written in general form:
//   min b^T lambda  s.t. -A_b^T lambda <= c_b,  -A_f^T lambda = c_f,
//   lambda_j >= 0 for j < m_I.
// Its multipliers are the original x (no sign change), and its variables
// are the original lambda; dualize(dualize(p)) reproduces p exactly.
TransformedProblem dualize(const LpProblem& p);

enum class Form { kPrimal, kDual };

std::string_view to_string(Form form);
// Primal iff m_I > n_b.
Form choose_form(const LpProblem& p);
TransformedProblem apply_form(const LpProblem& p, Form form);

}  // namespace agppa

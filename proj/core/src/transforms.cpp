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

#include <stdexcept>

#include "agppa/lp_problem.hpp"

namespace agppa {

SolutionMap SolutionMap::Identity(int n, int m) { return SolutionMap(Kind::kIdentity, n, m); }
SolutionMap SolutionMap::Dual(int n, int m) { return SolutionMap(Kind::kDual, n, m); }

PrimalDualPoint SolutionMap::to_original(const PrimalDualPoint& solved) const {
  if (kind_ == Kind::kIdentity) return solved;
  // Variables of the dual are the original multipliers and vice versa.
  return {solved.lambda, solved.x};
}

PrimalDualPoint SolutionMap::to_solved(const PrimalDualPoint& original) const {
  if (kind_ == Kind::kIdentity) return original;
  return {original.lambda, original.x};
}

TransformedProblem dualize(const LpProblem& p) {
  const int n = p.n();
  const int m = p.m();
  const int n_b = p.n_b();

  // Row i of -A^T is column i of A, negated.
  std::vector<Triplet> ineq;
  std::vector<Triplet> eq;
  for (int i = 0; i < n; ++i) {
    const auto col = p.a().column(i);
    for (std::size_t k = 0; k < col.indices.size(); ++k) {
      if (i < n_b) {
        ineq.push_back({i, col.indices[k], -col.values[k]});
      } else {
        eq.push_back({i - n_b, col.indices[k], -col.values[k]});
      }
    }
  }
  std::vector<double> c_b(p.c().begin(), p.c().begin() + n_b);
  std::vector<double> c_f(p.c().begin() + n_b, p.c().end());

  LpProblem dual(p.b(), SparseMatrix(n_b, m, ineq), std::move(c_b), SparseMatrix(n - n_b, m, eq),
                 std::move(c_f), p.m_ineq());
  return {std::move(dual), SolutionMap::Dual(n, m)};
}

std::string_view to_string(Form form) { return form == Form::kPrimal ? "primal" : "dual"; }

Form choose_form(const LpProblem& p) {
  return p.m_ineq() > p.n_b() ? Form::kPrimal : Form::kDual;
}

TransformedProblem apply_form(const LpProblem& p, Form form) {
  if (form == Form::kPrimal) return {p, SolutionMap::Identity(p.n(), p.m())};
  return dualize(p);
}

}  // namespace agppa

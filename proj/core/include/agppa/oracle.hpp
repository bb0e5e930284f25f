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

#include <stdexcept>
#include <vector>

#include "agppa/lp_problem.hpp"

namespace agppa {

inline constexpr int kOracleMaxVariables = 10;
inline constexpr int kOracleMaxRows = 14;

class OracleError : public std::runtime_error {
 public:
  enum class Kind { kTooLarge, kNoVertex, kInfeasible, kUnbounded, kSelfCheck };

  OracleError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct OracleSolution {
  std::vector<double> x;
  std::vector<double> lambda;
  double objective = 0.0;
  // Distinct optimal basic feasible points, and distinct dual-feasible basic
  // dual points attaining the optimal value; their hulls are the optimal
  // faces when these are bounded.
  std::vector<std::vector<double>> primal_vertices;
  std::vector<std::vector<double>> dual_vertices;
};

// Exhaustive basic-solution enumeration over the rows of A_I, A_E and the
// sign constraints (all equality rows in every basis). Requires n <= 10 and
// m <= 14. Throws OracleError when the problem is infeasible, unbounded,
// has no vertex, or the returned pair fails E1 <= 1e-9.
OracleSolution vertex_enum_solve(const LpProblem& p);

// Minimum-norm point of conv{points} - q by Wolfe's method; returns the
// distance from q to the hull.
double distance_to_hull(const std::vector<std::vector<double>>& points,
                        const std::vector<double>& q);

// Distance from z to (conv primal_vertices) x (conv dual_vertices).
double dist_to_optimal_face(const OracleSolution& sol, const PrimalDualPoint& z);

}  // namespace agppa

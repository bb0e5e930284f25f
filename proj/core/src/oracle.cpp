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

#include "agppa/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace agppa {
namespace {

constexpr double kSingular = 1e-10;
constexpr double kFeasTol = 1e-9;
constexpr double kSelfCheckTol = 1e-9;

struct Row {
  Eigen::VectorXd a;
  double rhs = 0.0;
  enum { kIneq, kEq, kSign } kind = kIneq;
  int index = 0;  // row of A_I / A_E, or variable
};

bool same_point(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d += (a[i] - b[i]) * (a[i] - b[i]);
    s += a[i] * a[i];
  }
  return std::sqrt(d) <= 1e-9 * (1.0 + std::sqrt(s));
}

void add_unique(std::vector<std::vector<double>>& set, const std::vector<double>& v) {
  for (const auto& u : set) {
    if (same_point(u, v)) return;
  }
  set.push_back(v);
}

// Calls f(subset) for every k-subset of {0..r-1}, in lexicographic order.
template <typename F>
void for_each_subset(int r, int k, F&& f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > r) return;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == r - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct Basis {
  std::vector<double> x;
  std::vector<double> lambda;
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  bool primal_feasible = false;
  bool dual_feasible = false;
};

}  // namespace

OracleSolution vertex_enum_solve(const LpProblem& p) {
  const int n = p.n();
  if (n == 0) throw OracleError(OracleError::Kind::kNoVertex, "problem has no variables");
  if (n > kOracleMaxVariables || p.m() > kOracleMaxRows) {
    throw OracleError(OracleError::Kind::kTooLarge,
                      "vertex enumeration limited to n <= 10 and m <= 14");
  }

  std::vector<Row> rows;
  auto dense_row = [&](const SparseMatrix& a, int i) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    const auto r = a.row(i);
    for (std::size_t k = 0; k < r.indices.size(); ++k) v[r.indices[k]] = r.values[k];
    return v;
  };
  for (int j = 0; j < p.m_eq(); ++j) rows.push_back({dense_row(p.a_eq(), j), p.b_eq()[j], Row::kEq, j});
  const int first_ineq = static_cast<int>(rows.size());
  for (int j = 0; j < p.m_ineq(); ++j) {
    rows.push_back({dense_row(p.a_ineq(), j), p.b_ineq()[j], Row::kIneq, j});
  }
  for (int i = 0; i < p.n_b(); ++i) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    v[i] = -1.0;
    rows.push_back({v, 0.0, Row::kSign, i});
  }
  const int n_ineq = static_cast<int>(rows.size()) - first_ineq;
  const int k = n - p.m_eq();
  if (k < 0) throw OracleError(OracleError::Kind::kNoVertex, "more equalities than variables");

  auto feasible = [&](const Eigen::VectorXd& x) {
    for (const Row& r : rows) {
      const double v = r.a.dot(x) - r.rhs;
      const double tol = kFeasTol * (1.0 + std::abs(r.rhs));
      if (r.kind == Row::kEq ? std::abs(v) > tol : v > tol) return false;
    }
    return true;
  };

  Eigen::VectorXd c(n);
  for (int i = 0; i < n; ++i) c[i] = p.c()[i];

  // Every nonsingular basis gives a basic primal point and a basic dual
  // point; the optimal faces are the hulls of the feasible ones attaining
  // the optimal value.
  bool any_vertex = false;
  std::vector<Basis> bases;
  for_each_subset(n_ineq, k, [&](const std::vector<int>& subset) {
    Eigen::MatrixXd b(n, n);
    Eigen::VectorXd rhs(n);
    std::vector<int> chosen;
    for (int j = 0; j < first_ineq; ++j) chosen.push_back(j);
    for (int s : subset) chosen.push_back(first_ineq + s);
    for (int r = 0; r < n; ++r) {
      b.row(r) = rows[chosen[r]].a.transpose();
      rhs[r] = rows[chosen[r]].rhs;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(b);
    lu.setThreshold(kSingular);
    if (lu.rank() < n) return;
    any_vertex = true;
    const Eigen::VectorXd x = lu.solve(rhs);
    // B^T y = -c.
    const Eigen::VectorXd y = lu.transpose().solve(-c);

    Basis bs;
    bs.x.assign(x.data(), x.data() + n);
    bs.primal_objective = c.dot(x);
    bs.primal_feasible = feasible(x);
    bs.lambda.assign(p.m(), 0.0);
    bs.dual_feasible = true;
    for (int r = 0; r < n; ++r) {
      const Row& row = rows[chosen[r]];
      if (row.kind != Row::kEq && y[r] < -kFeasTol) bs.dual_feasible = false;
      if (row.kind == Row::kIneq) bs.lambda[row.index] = std::max(y[r], 0.0);
      if (row.kind == Row::kEq) bs.lambda[p.m_ineq() + row.index] = y[r];
      bs.dual_objective -= row.rhs * y[r];
    }
    if (bs.primal_feasible || bs.dual_feasible) bases.push_back(std::move(bs));
  });
  if (!any_vertex) throw OracleError(OracleError::Kind::kNoVertex, "constraint matrix rank < n");

  bool any_primal = false;
  bool any_dual = false;
  double best = std::numeric_limits<double>::infinity();
  double dual_best = -std::numeric_limits<double>::infinity();
  for (const Basis& bs : bases) {
    if (bs.primal_feasible) {
      any_primal = true;
      best = std::min(best, bs.primal_objective);
    }
    if (bs.dual_feasible) {
      any_dual = true;
      dual_best = std::max(dual_best, bs.dual_objective);
    }
  }
  if (!any_primal) throw OracleError(OracleError::Kind::kInfeasible, "no feasible vertex");
  if (!any_dual) throw OracleError(OracleError::Kind::kUnbounded, "no dual-feasible basis");
  const double opt_tol = kFeasTol * (1.0 + std::abs(best));
  if (dual_best < best - opt_tol) {
    throw OracleError(OracleError::Kind::kUnbounded, "primal and dual vertex values differ");
  }

  OracleSolution sol;
  sol.objective = best;
  bool have_pair = false;
  for (const Basis& bs : bases) {
    const bool primal_opt = bs.primal_feasible && bs.primal_objective <= best + opt_tol;
    const bool dual_opt = bs.dual_feasible && bs.dual_objective >= best - opt_tol;
    if (primal_opt) add_unique(sol.primal_vertices, bs.x);
    if (dual_opt) add_unique(sol.dual_vertices, bs.lambda);
    if (primal_opt && dual_opt && !have_pair) {
      sol.x = bs.x;
      sol.lambda = bs.lambda;
      have_pair = true;
    }
  }
  if (!have_pair) {
    throw OracleError(OracleError::Kind::kSelfCheck, "no basis is both primal and dual optimal");
  }

  const PrimalDualPoint z{sol.x, sol.lambda};
  const double e1 = residual_e1(p, z);
  if (!(e1 <= kSelfCheckTol)) {
    throw OracleError(OracleError::Kind::kSelfCheck,
                      "oracle pair has E1 = " + std::to_string(e1));
  }
  const std::vector<double> ax = spmv(p.a(), sol.x);
  for (int j = 0; j < p.m_ineq(); ++j) {
    if (std::abs(sol.lambda[j] * (ax[j] - p.b()[j])) > kSelfCheckTol) {
      throw OracleError(OracleError::Kind::kSelfCheck, "complementary slackness violated");
    }
  }
  return sol;
}

double distance_to_hull(const std::vector<std::vector<double>>& points,
                        const std::vector<double>& q) {
  if (points.empty()) throw std::invalid_argument("distance_to_hull: no points");
  const int d = static_cast<int>(q.size());
  const int np = static_cast<int>(points.size());
  if (d == 0) return 0.0;
  Eigen::MatrixXd y(d, np);
  for (int i = 0; i < np; ++i) {
    for (int k = 0; k < d; ++k) y(k, i) = points[i][k] - q[k];
  }
  if (np == 1) return y.col(0).norm();

  // Wolfe's minimum-norm-point algorithm on the shifted points.
  const double scale = std::max(1.0, y.colwise().squaredNorm().maxCoeff());
  const double tol = 1e-14 * scale;
  int start = 0;
  y.colwise().squaredNorm().minCoeff(&start);
  std::vector<int> s{start};
  std::vector<double> w{1.0};
  Eigen::VectorXd x = y.col(start);

  for (int major = 0; major < 1000; ++major) {
    int j = 0;
    (x.transpose() * y).minCoeff(&j);
    if (x.squaredNorm() - x.dot(y.col(j)) <= tol) break;
    if (std::find(s.begin(), s.end(), j) != s.end()) break;
    s.push_back(j);
    w.push_back(0.0);

    for (int minor = 0; minor < 1000; ++minor) {
      const int ns = static_cast<int>(s.size());
      Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(ns + 1, ns + 1);
      for (int a = 0; a < ns; ++a) {
        for (int b = 0; b < ns; ++b) kkt(a, b) = y.col(s[a]).dot(y.col(s[b]));
        kkt(a, ns) = 1.0;
        kkt(ns, a) = 1.0;
      }
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(ns + 1);
      rhs[ns] = 1.0;
      const Eigen::VectorXd v = kkt.fullPivLu().solve(rhs).head(ns);
      if ((v.array() > 1e-15).all()) {
        for (int a = 0; a < ns; ++a) w[a] = v[a];
        break;
      }
      double theta = 1.0;
      for (int a = 0; a < ns; ++a) {
        if (v[a] <= 1e-15 && w[a] - v[a] > 0.0) theta = std::min(theta, w[a] / (w[a] - v[a]));
      }
      for (int a = 0; a < ns; ++a) w[a] = theta * v[a] + (1.0 - theta) * w[a];
      std::vector<int> s2;
      std::vector<double> w2;
      for (int a = 0; a < ns; ++a) {
        if (w[a] > 1e-15) {
          s2.push_back(s[a]);
          w2.push_back(w[a]);
        }
      }
      s.swap(s2);
      w.swap(w2);
      if (s.size() == 1) {
        w[0] = 1.0;
        break;
      }
    }
    x.setZero();
    for (std::size_t a = 0; a < s.size(); ++a) x += w[a] * y.col(s[a]);
  }
  return x.norm();
}

double dist_to_optimal_face(const OracleSolution& sol, const PrimalDualPoint& z) {
  const double dx = distance_to_hull(sol.primal_vertices, z.x);
  const double dl = distance_to_hull(sol.dual_vertices, z.lambda);
  return std::sqrt(dx * dx + dl * dl);
}

}  // namespace agppa

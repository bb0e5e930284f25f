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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "agppa/generators.hpp"
#include "agppa/oracle.hpp"

namespace agppa::test {

Eigen::MatrixXd to_dense(const SparseMatrix& a) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(a.rows(), a.cols());
  for (const Triplet& t : a.Triplets()) d(t.row, t.col) = t.value;
  return d;
}

std::vector<double> dense_matvec(const Eigen::MatrixXd& a, const std::vector<double>& x) {
  std::vector<double> y(a.rows(), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0.0) s += a(i, j) * x[j];
    }
    y[i] = s;
  }
  return y;
}

std::vector<double> dense_matvec_t(const Eigen::MatrixXd& a, const std::vector<double>& y) {
  std::vector<double> x(a.cols(), 0.0);
  for (int j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i) {
      if (a(i, j) != 0.0) s += a(i, j) * y[i];
    }
    x[j] = s;
  }
  return x;
}

double svd_norm(const SparseMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_dense(a));
  return svd.singularValues()(0);
}

double central_difference(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> x, int i, double h) {
  const double xi = x[i];
  x[i] = xi + h;
  const double fp = f(x);
  x[i] = xi - h;
  const double fm = f(x);
  return (fp - fm) / (2.0 * h);
}

double golden_section(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - r * (b - a);
  double d = a + r * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol * (1.0 + std::abs(a) + std::abs(b))) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  return (a + b) / 2.0;
}

namespace {

double big_f_dense(const LpProblem& p, const Eigen::MatrixXd& a, const Eigen::VectorXd& x,
                   const Eigen::VectorXd& x_bar, const Eigen::VectorXd& lambda_bar, double sigma,
                   Eigen::VectorXd* lambda_out) {
  const Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(p.b().data(), p.m());
  const Eigen::VectorXd c = Eigen::Map<const Eigen::VectorXd>(p.c().data(), p.n());
  Eigen::VectorXd v = lambda_bar + sigma * (a * x - b);
  for (int j = 0; j < p.m_ineq(); ++j) v[j] = std::max(v[j], 0.0);
  if (lambda_out != nullptr) *lambda_out = v;
  return c.dot(x) + (v.squaredNorm() - lambda_bar.squaredNorm()) / (2.0 * sigma) +
         (x - x_bar).squaredNorm() / (2.0 * sigma);
}

}  // namespace

ExactInner exact_inner_minimizer(const InnerInstance& inst) {
  const LpProblem& p = inst.problem();
  const int n = p.n();
  const int m = p.m();
  const int mi = p.m_ineq();
  const int nb = p.n_b();
  if (mi + nb > 20) throw std::invalid_argument("exact_inner_minimizer: too many pieces");
  const double sigma = inst.sigma();
  const Eigen::MatrixXd a = to_dense(p.a());
  const Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(p.b().data(), m);
  const Eigen::VectorXd c = Eigen::Map<const Eigen::VectorXd>(p.c().data(), n);
  const Eigen::VectorXd x_bar = Eigen::Map<const Eigen::VectorXd>(inst.x_bar().data(), n);
  const Eigen::VectorXd l_bar = Eigen::Map<const Eigen::VectorXd>(inst.lambda_bar().data(), m);
  const double tol = 1e-9 * (1.0 + c.lpNorm<Eigen::Infinity>() + b.lpNorm<Eigen::Infinity>() +
                             x_bar.lpNorm<Eigen::Infinity>() + l_bar.lpNorm<Eigen::Infinity>());

  ExactInner best;
  best.big_f = std::numeric_limits<double>::infinity();
  const std::uint32_t pieces = 1u << (mi + nb);
  for (std::uint32_t mask = 0; mask < pieces; ++mask) {
    // Bit j < m_I: row j has a positive multiplier. Bit m_I + i: x_i = 0.
    std::vector<int> rows;
    for (int j = 0; j < m; ++j) {
      if (j >= mi || (mask >> j & 1u)) rows.push_back(j);
    }
    std::vector<int> free;
    for (int i = 0; i < n; ++i) {
      if (!(i < nb && (mask >> (mi + i) & 1u))) free.push_back(i);
    }
    Eigen::MatrixXd as(rows.size(), n);
    Eigen::VectorXd rhs_s(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      as.row(r) = a.row(rows[r]);
      rhs_s[r] = l_bar[rows[r]] - sigma * b[rows[r]];
    }
    const Eigen::MatrixXd h =
        sigma * as.transpose() * as + Eigen::MatrixXd::Identity(n, n) / sigma;
    const Eigen::VectorXd g0 = -c - as.transpose() * rhs_s + x_bar / sigma;
    Eigen::MatrixXd hf(free.size(), free.size());
    Eigen::VectorXd gf(free.size());
    for (std::size_t r = 0; r < free.size(); ++r) {
      gf[r] = g0[free[r]];
      for (std::size_t s = 0; s < free.size(); ++s) hf(r, s) = h(free[r], free[s]);
    }
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    if (!free.empty()) {
      const Eigen::VectorXd xf = hf.ldlt().solve(gf);
      for (std::size_t r = 0; r < free.size(); ++r) x[free[r]] = xf[r];
    }

    const Eigen::VectorXd v = l_bar + sigma * (a * x - b);
    bool ok = true;
    for (int j = 0; j < mi && ok; ++j) {
      const bool positive = mask >> j & 1u;
      if (positive ? v[j] < -tol : v[j] > tol) ok = false;
    }
    for (int i = 0; i < nb && ok; ++i) {
      if (x[i] < -tol) ok = false;
    }
    if (!ok) continue;
    for (int i = 0; i < nb; ++i) x[i] = std::max(x[i], 0.0);
    Eigen::VectorXd lambda;
    const double f = big_f_dense(p, a, x, x_bar, l_bar, sigma, &lambda);
    const Eigen::VectorXd grad = c + a.transpose() * lambda + (x - x_bar) / sigma;
    for (int i = 0; i < nb && ok; ++i) {
      if (x[i] == 0.0 && grad[i] < -tol) ok = false;
    }
    if (!ok || !(f < best.big_f)) continue;
    best.big_f = f;
    best.x.assign(x.data(), x.data() + n);
    best.lambda.assign(lambda.data(), lambda.data() + m);
  }
  if (best.x.empty() && n > 0) throw std::runtime_error("exact_inner_minimizer: no piece fits");
  return best;
}

PrimalDualPoint exact_resolvent(const LpProblem& p, const PrimalDualPoint& z, double sigma) {
  const ProblemNorms norms = compute_norms(p);
  const InnerInstance inst(p, norms, z.x, z.lambda, sigma);
  ExactInner e = exact_inner_minimizer(inst);
  return {std::move(e.x), std::move(e.lambda)};
}

Eigen::MatrixXd dense_generalized_hessian(const InnerInstance& inst, const std::vector<double>& x,
                                          const std::vector<bool>& active) {
  const LpProblem& p = inst.problem();
  const int n = p.n();
  const double sigma = inst.sigma();
  const Eigen::MatrixXd a = to_dense(p.a());
  const Eigen::VectorXd xv = Eigen::Map<const Eigen::VectorXd>(x.data(), n);
  const Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(p.b().data(), p.m());
  const Eigen::VectorXd l_bar =
      Eigen::Map<const Eigen::VectorXd>(inst.lambda_bar().data(), p.m());
  const Eigen::VectorXd w = l_bar + sigma * (a * xv - b);
  Eigen::VectorXd d = Eigen::VectorXd::Ones(p.m());
  for (int j = 0; j < p.m_ineq(); ++j) {
    if (w[j] < 0.0) d[j] = 0.0;
  }
  Eigen::MatrixXd h =
      sigma * a.transpose() * d.asDiagonal() * a + Eigen::MatrixXd::Identity(n, n) / sigma;
  for (int i = 0; i < n; ++i) {
    if (!active[i]) {
      h.row(i).setZero();
      h.col(i).setZero();
    }
  }
  return h;
}

std::vector<LpProblem> tiny_corpus(int count, std::uint64_t seed) {
  std::vector<LpProblem> out;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; static_cast<int>(out.size()) < count; ++attempt) {
    if (attempt > 50 * count) throw std::runtime_error("tiny_corpus: too many rejections");
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const int m_eq = std::uniform_int_distribution<int>(0, std::min(2, n - 1))(rng);
    const int m_ineq = std::uniform_int_distribution<int>(1, 8 - m_eq)(rng);
    const int n_b = std::uniform_int_distribution<int>(0, n)(rng);
    const std::uint64_t s = rng();
    LpProblem p = gen_mixed_lp(n, m_ineq, m_eq, n_b, s);
    try {
      (void)vertex_enum_solve(p);
    } catch (const OracleError& e) {
      if (e.kind() == OracleError::Kind::kNoVertex) continue;
      throw;
    }
    out.push_back(std::move(p));
  }
  return out;
}

PrimalDualPoint random_point(const LpProblem& p, std::uint64_t seed, double scale) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-scale, scale);
  PrimalDualPoint z{std::vector<double>(p.n()), std::vector<double>(p.m())};
  for (int i = 0; i < p.n(); ++i) z.x[i] = i < p.n_b() ? std::abs(u(rng)) : u(rng);
  for (int j = 0; j < p.m(); ++j) z.lambda[j] = j < p.m_ineq() ? std::abs(u(rng)) : u(rng);
  return z;
}

}  // namespace agppa::test

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

#include "agppa/hood.hpp"

#include <cmath>

namespace agppa {

int apg_iterations(const InnerInstance& inst, const HoodConfig& cfg) {
  return static_cast<int>(std::ceil(cfg.apg_factor * inst.sigma() * inst.norms().spectral)) + 2;
}

long long rcd_epoch_length(const InnerInstance& inst, const HoodConfig& cfg) {
  const double s = inst.sigma();
  const double len =
      cfg.rcd_factor * inst.n() * std::sqrt(1.0 + s * s * inst.norms().max_column_sq);
  return std::max<long long>(1, static_cast<long long>(std::ceil(len)));
}

HoodResult hood_apg(const InnerInstance& inst, const std::vector<double>& y,
                    const HoodConfig& cfg) {
  const int n = inst.n();
  const double mu = inst.mu();
  const double q = mu / (inst.lipschitz() + mu);
  const double beta = (1.0 - std::sqrt(q)) / (1.0 + std::sqrt(q));
  const int iters = apg_iterations(inst, cfg);

  InnerEval e;
  std::vector<double> x_prev = y;
  std::vector<double> x_next(n);
  std::vector<double> point = y;
  for (int k = 0; k < iters; ++k) {
    inst.evaluate(point, e);
    inst.prox_grad_step(e, x_next);
    for (int i = 0; i < n; ++i) point[i] = x_next[i] + beta * (x_next[i] - x_prev[i]);
    std::swap(x_prev, x_next);
  }
  HoodResult out;
  out.work = 2.0 * iters + 2.0;
  if (inst.big_f_value(x_prev) > inst.big_f_value(y)) {
    out.x = y;
  } else {
    out.x = std::move(x_prev);
  }
  return out;
}

HoodResult hood_rcd(const InnerInstance& inst, const std::vector<double>& y, std::mt19937_64& rng,
                    const HoodConfig& cfg) {
  const LpProblem& p = inst.problem();
  const int n = p.n();
  const int m = p.m();
  const double sigma = inst.sigma();
  const auto& b = p.b();
  const auto& lambda_bar = inst.lambda_bar();
  const auto& x_bar = inst.x_bar();
  if (n == 0) return {y, 0.0};
  const double nnz = std::max<double>(1.0, static_cast<double>(p.a().nnz()));
  const long long epoch = rcd_epoch_length(inst, cfg);

  std::vector<double> z = y;
  std::vector<double> u(n, 0.0);
  std::vector<double> az = spmv(p.a(), z);
  std::vector<double> au(m, 0.0);
  std::uniform_int_distribution<int> pick(0, n - 1);
  double work = 1.0;

  double theta = 1.0 / n;
  double theta_sq = theta * theta;
  for (long long k = 0; k < epoch; ++k) {
    theta_sq = theta * theta;
    const int i = pick(rng);
    const auto col = p.a().column(i);
    double g = p.c()[i];
    for (std::size_t t = 0; t < col.indices.size(); ++t) {
      const int r = col.indices[t];
      double w = lambda_bar[r] + sigma * (theta_sq * au[r] + az[r] - b[r]);
      if (r < p.m_ineq()) w = std::max(w, 0.0);
      g += col.values[t] * w;
    }
    const double a = n * theta * inst.coordinate_lipschitz(i);
    double z_new = (a * z[i] - g + x_bar[i] / sigma) / (a + 1.0 / sigma);
    if (i < p.n_b()) z_new = std::max(z_new, 0.0);
    const double step = z_new - z[i];
    work += 2.0 * static_cast<double>(col.indices.size()) / nnz;
    if (step != 0.0) {
      z[i] = z_new;
      const double du = -(1.0 - n * theta) / theta_sq * step;
      u[i] += du;
      for (std::size_t t = 0; t < col.indices.size(); ++t) {
        const int r = col.indices[t];
        az[r] += col.values[t] * step;
        au[r] += col.values[t] * du;
      }
    }
    const double t2 = theta * theta;
    theta = (std::sqrt(t2 * t2 + 4.0 * t2) - t2) / 2.0;
  }

  HoodResult out;
  out.x.resize(n);
  for (int i = 0; i < n; ++i) {
    double v = theta_sq * u[i] + z[i];
    if (i < p.n_b()) v = std::max(v, 0.0);
    out.x[i] = v;
  }
  out.work = work;
  return out;
}

HoodResult hood_rcd(const InnerInstance& inst, const std::vector<double>& y, std::uint64_t seed,
                    const HoodConfig& cfg) {
  std::mt19937_64 rng(seed);
  return hood_rcd(inst, y, rng, cfg);
}

Hood::Hood(const InnerInstance& inst, HoodConfig cfg) : inst_(&inst), cfg_(cfg), rng_(cfg.seed) {}

HoodResult Hood::operator()(const std::vector<double>& y) {
  if (cfg_.kind == HoodKind::kApg) return hood_apg(*inst_, y, cfg_);
  return hood_rcd(*inst_, y, rng_, cfg_);
}

double Hood::epoch_cost() const {
  if (cfg_.kind == HoodKind::kApg) return 2.0 * apg_iterations(*inst_, cfg_) + 2.0;
  if (inst_->n() == 0) return 1.0;
  return 2.0 * static_cast<double>(rcd_epoch_length(*inst_, cfg_)) / inst_->n() + 1.0;
}

}  // namespace agppa

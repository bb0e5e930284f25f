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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include "agppa/lp_problem.hpp"

namespace agppa {
namespace {

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double e : v) s += e * e;
  return std::sqrt(s);
}

double norm_inf(std::span<const double> v) {
  double s = 0.0;
  for (double e : v) s = std::max(s, std::abs(e));
  return s;
}

}  // namespace

std::string_view to_string(ResidualKind kind) {
  switch (kind) {
    case ResidualKind::kE1:
      return "e1";
    case ResidualKind::kE2:
      return "e2";
    case ResidualKind::kE3:
      return "e3";
  }
  return "?";
}

ResidualKind parse_residual_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "e1") return ResidualKind::kE1;
  if (lower == "e2") return ResidualKind::kE2;
  if (lower == "e3") return ResidualKind::kE3;
  throw std::invalid_argument("unknown residual '" + std::string(text) + "'");
}

KktBlocks kkt_blocks(const LpProblem& p, const PrimalDualPoint& z, std::span<const double> ax,
                     std::span<const double> aty) {
  check_dimensions(p, z);
  KktBlocks k;
  k.ctx = objective(p, z.x);
  for (int j = 0; j < p.m(); ++j) k.btl += p.b()[j] * z.lambda[j];

  k.dual.resize(p.n());
  for (int i = 0; i < p.n(); ++i) {
    const double v = aty[i] + p.c()[i];
    k.dual[i] = i < p.n_b() ? std::min(v, 0.0) : v;
  }
  k.primal.resize(p.m());
  for (int j = 0; j < p.m(); ++j) {
    const double v = ax[j] - p.b()[j];
    k.primal[j] = j < p.m_ineq() ? std::max(v, 0.0) : v;
  }
  return k;
}

KktBlocks kkt_blocks(const LpProblem& p, const PrimalDualPoint& z) {
  check_dimensions(p, z);
  const std::vector<double> ax = spmv(p.a(), z.x);
  const std::vector<double> aty = spmv_t(p.a(), z.lambda);
  return kkt_blocks(p, z, ax, aty);
}

double residual_e1(const KktBlocks& k) {
  double s = k.gap() * k.gap();
  for (double e : k.dual) s += e * e;
  for (double e : k.primal) s += e * e;
  return std::sqrt(s);
}

double residual_e2(const LpProblem& p, const KktBlocks& k) {
  const double gap = std::abs(k.gap()) / (1.0 + std::abs(k.ctx) + std::abs(k.btl));
  const double primal = norm2(k.primal) / (1.0 + norm2(p.b()));
  const double dual = norm2(k.dual) / (1.0 + norm2(p.c()));
  return std::max({gap, primal, dual});
}

double residual_e3(const KktBlocks& k) {
  const double gap = std::abs(k.gap()) / std::max(1.0, std::abs(k.ctx));
  return std::max({gap, norm_inf(k.primal), norm_inf(k.dual)});
}

double residual(const LpProblem& p, const KktBlocks& k, ResidualKind kind) {
  switch (kind) {
    case ResidualKind::kE1:
      return residual_e1(k);
    case ResidualKind::kE2:
      return residual_e2(p, k);
    case ResidualKind::kE3:
      return residual_e3(k);
  }
  throw std::invalid_argument("unknown residual kind");
}

double residual_e1(const LpProblem& p, const PrimalDualPoint& z) {
  return residual_e1(kkt_blocks(p, z));
}
double residual_e2(const LpProblem& p, const PrimalDualPoint& z) {
  return residual_e2(p, kkt_blocks(p, z));
}
double residual_e3(const LpProblem& p, const PrimalDualPoint& z) {
  return residual_e3(kkt_blocks(p, z));
}
double residual(const LpProblem& p, const PrimalDualPoint& z, ResidualKind kind) {
  return residual(p, kkt_blocks(p, z), kind);
}

}  // namespace agppa

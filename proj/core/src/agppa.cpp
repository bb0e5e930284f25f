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

#include "agppa/agppa.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#ifdef AGPPA_HAVE_QUADMATH
#include <quadmath.h>
#endif

namespace agppa {
namespace {

#ifdef AGPPA_HAVE_QUADMATH
__extension__ typedef __float128 Wide;
Wide wide_pow(Wide base, Wide e) { return powq(base, e); }
#else
using Wide = long double;
Wide wide_pow(Wide base, Wide e) { return std::pow(base, e); }
#endif

constexpr double kAlphaLow = 1e-8;
constexpr double kAlphaHigh = 1e12;

double k_of(double gamma) { return std::min(gamma, 2.0 * gamma - gamma * gamma); }

// splitmix64 finalizer, used to give every inner solve its own RCD stream.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t step) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (step + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

void AgppaParams::validate() const {
  if (!(gamma > 0.0 && gamma < 2.0)) throw std::invalid_argument("gamma must lie in (0, 2)");
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("rho must lie in (0, 1)");
  if (!(rho_delta > 0.0 && rho_delta < 1.0)) {
    throw std::invalid_argument("rho_delta must lie in (0, 1)");
  }
  if (!(rho_eta > 0.0 && rho_eta < 1.0)) throw std::invalid_argument("rho_eta must lie in (0, 1)");
  if (!(rho_sigma > 1.0)) throw std::invalid_argument("rho_sigma must exceed 1");
  if (!(varsigma > 1.0)) throw std::invalid_argument("varsigma must exceed 1");
  if (!(eta0 > 0.0)) throw std::invalid_argument("eta0 must be positive");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (delta && !(*delta >= 0.0 && *delta < 0.5)) {
    throw std::invalid_argument("delta must lie in [0, 1/2)");
  }
  if (sigma0 && !(*sigma0 > 0.0)) throw std::invalid_argument("sigma0 must be positive");
  if (!(sigma0_scale > 0.0)) throw std::invalid_argument("sigma0_scale must be positive");
  if (!(max_time_seconds > 0.0)) throw std::invalid_argument("max_time must be positive");
  if (max_stages < 1 || max_steps < 1) throw std::invalid_argument("budgets must be positive");
}

double rho_of(double alpha, double delta, double gamma) {
  if (!(alpha > 0.0)) throw std::domain_error("rho_of: alpha must be positive");
  if (!(delta >= 0.0 && delta < 0.5)) throw std::domain_error("rho_of: delta outside [0, 1/2)");
  if (!(gamma > 0.0 && gamma < 2.0)) throw std::domain_error("rho_of: gamma outside (0, 2)");
  const double a2 = alpha * alpha;
  const double root = std::sqrt(a2 + 1.0);
  const double head = std::sqrt(1.0 - k_of(gamma) * a2 / (a2 + 1.0));
  return (head + delta * (std::min(gamma, 1.0) / root + 1.0)) / (1.0 - delta);
}

double default_delta(double rho, double rho_delta, double gamma) {
  const double floor = std::sqrt(1.0 - k_of(gamma));
  if (!(rho > floor)) {
    throw std::domain_error("rho must exceed sqrt(1 - min(gamma, 2 gamma - gamma^2))");
  }
  return rho_delta * (rho - floor) / (1.0 + rho);
}

double solve_alpha(double rho, double delta, double gamma) {
  double lo = kAlphaLow;
  double hi = kAlphaHigh;
  if (!(rho_of(lo, delta, gamma) >= rho && rho_of(hi, delta, gamma) <= rho)) {
    throw std::domain_error("solve_alpha: target rate not bracketed by [1e-8, 1e12]");
  }
  for (int it = 0; it < 400; ++it) {
    const double mid = std::sqrt(lo * hi);
    if (mid <= lo || mid >= hi) break;
    if (rho_of(mid, delta, gamma) > rho) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // Return the endpoint whose rate is closer to the target.
  return std::abs(rho_of(lo, delta, gamma) - rho) <= std::abs(rho_of(hi, delta, gamma) - rho) ? lo
                                                                                             : hi;
}

double checking_constant(double alpha, double delta) {
  return (1.0 + delta) / ((1.0 - delta) * (1.0 - 1.0 / std::sqrt(alpha * alpha + 1.0)));
}

DerivedConstants derive_constants(const AgppaParams& params, double frobenius_norm) {
  params.validate();
  DerivedConstants d;
  d.delta = params.delta ? *params.delta
                         : default_delta(params.rho, params.rho_delta, params.gamma);
  d.alpha = solve_alpha(params.rho, d.delta, params.gamma);
  d.c = checking_constant(d.alpha, d.delta);
  const double base = params.sigma0 ? *params.sigma0
                                    : (frobenius_norm > 0.0 ? d.alpha / frobenius_norm : d.alpha);
  d.sigma0 = base * params.sigma0_scale;
  return d;
}

// Evaluated in binary128 and rounded once, so every entry is the correctly
// rounded closed form regardless of s and t.
double sigma_schedule(double sigma0, double rho_sigma, int s) {
  const Wide v = static_cast<Wide>(sigma0) * wide_pow(rho_sigma, static_cast<Wide>(s));
  return static_cast<double>(v);
}

double eta_schedule(double eta0, double rho_eta, double varsigma, int s, long long t) {
  const Wide v = static_cast<Wide>(eta0) * wide_pow(rho_eta, static_cast<Wide>(s)) *
                 wide_pow(static_cast<Wide>(1) + static_cast<Wide>(t), -static_cast<Wide>(varsigma));
  return static_cast<double>(v);
}

bool checking_condition(std::span<const double> history, double new_norm, double c, double rho) {
  const std::size_t t = history.size();
  double bound = new_norm;
  double factor = 1.0;
  for (std::size_t k = 0; k < t; ++k) {
    factor *= rho;
    bound = std::min(bound, factor * history[t - 1 - k]);
  }
  return new_norm > c * bound;
}

IgppaStepResult igppa_step(const LpProblem& p, const ProblemNorms& norms, const PrimalDualPoint& z,
                           double sigma, double eta, double delta, double gamma,
                           const InnerConfig& inner) {
  check_dimensions(p, z);
  InnerInstance inst(p, norms, z.x, z.lambda, sigma);
  IgppaStepResult out;
  out.inner = inner_solve(inst, eta, delta, inner);
  out.w.x = out.inner.x;
  out.w.lambda = inst.lambda_of(out.w.x);
  if (gamma == 1.0) {
    out.z_next = out.w;
  } else {
    out.z_next = z;
    for (std::size_t i = 0; i < z.x.size(); ++i) {
      out.z_next.x[i] = gamma * out.w.x[i] + (1.0 - gamma) * z.x[i];
    }
    for (std::size_t j = 0; j < z.lambda.size(); ++j) {
      out.z_next.lambda[j] = gamma * out.w.lambda[j] + (1.0 - gamma) * z.lambda[j];
    }
  }
  return out;
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kSolved:
      return "Solved";
    case SolveStatus::kTimeLimit:
      return "TimeLimit";
    case SolveStatus::kStageLimit:
      return "StageLimit";
    case SolveStatus::kInnerFailure:
      return "InnerFailure";
  }
  return "?";
}

SolveReport agppa_run(const LpProblem& p, const AgppaParams& params, const InnerConfig& inner,
                      const RunOptions& options) {
  const Clock::time_point t0 = Clock::now();
  params.validate();
  const ProblemNorms norms = compute_norms(p);
  const DerivedConstants dc = derive_constants(params, norms.frobenius);
  const double eps = params.epsilon;
  const auto residual_of = [&](const PrimalDualPoint& z) {
    return residual(p, z, params.residual_kind);
  };

  SolveReport rep;
  rep.constants = dc;

  PrimalDualPoint z = options.initial_point ? *options.initial_point : zero_point(p);
  project_signs(p, z);
  double ez = residual_of(z);
  rep.history.push_back({0, 0, dc.sigma0, params.eta0, ez, 0.0, ms_since(t0)});

  PrimalDualPoint best_overall = z;
  double best_overall_e = ez;

  InnerConfig icfg = inner;
  icfg.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(params.max_time_seconds));

  int s = 0;
  long long total = 0;
  double last_eta = params.eta0;
  std::optional<SolveStatus> stop;
  std::vector<double> history;

  while (ez > eps) {
    if (s >= params.max_stages) {
      stop = SolveStatus::kStageLimit;
      break;
    }
    const double sigma = sigma_schedule(dc.sigma0, params.rho_sigma, s);
    history.clear();
    PrimalDualPoint zt = z;
    double et = ez;
    PrimalDualPoint best = z;
    double best_e = ez;
    bool reached = false;

    for (long long t = 0;; ++t) {
      if (total >= params.max_steps) {
        stop = SolveStatus::kStageLimit;
        break;
      }
      if (Clock::now() >= *icfg.deadline) {
        stop = SolveStatus::kTimeLimit;
        break;
      }
      const double eta = eta_schedule(params.eta0, params.rho_eta, params.varsigma, s, t);
      icfg.hood.seed = mix_seed(inner.hood.seed, static_cast<std::uint64_t>(total));
      const Clock::time_point ti = Clock::now();
      IgppaStepResult step = igppa_step(p, norms, zt, sigma, eta, dc.delta, params.gamma, icfg);
      rep.inner_seconds += std::chrono::duration<double>(Clock::now() - ti).count();
      rep.inner += step.inner.stats;
      ++total;
      last_eta = eta;

      const double norm = distance(step.z_next, zt);
      const bool violation = checking_condition(history, norm, dc.c, params.rho);
      history.push_back(norm);
      const double e_next = residual_of(step.z_next);
      rep.history.push_back({total, s, sigma, eta, e_next, norm, ms_since(t0)});
      if (violation) ++rep.violations;
      if (options.on_step) {
        StepEvent ev{s,   t,         sigma, eta, &zt, &step.z_next, &step.w, norm, violation,
                     &step.inner};
        options.on_step(ev);
      }
      if (e_next < best_e) {
        best = step.z_next;
        best_e = e_next;
      }
      if (e_next < best_overall_e) {
        best_overall = step.z_next;
        best_overall_e = e_next;
      }
      if (step.inner.status != InnerStatus::kSatisfied) {
        stop = step.inner.status == InnerStatus::kTimeLimit ? SolveStatus::kTimeLimit
                                                            : SolveStatus::kInnerFailure;
        break;
      }
      if (!params.check_residual_first && et <= eps) {
        reached = true;
        break;
      }
      if (violation) {
        z = std::move(best);
        ez = best_e;
        break;
      }
      zt = std::move(step.z_next);
      et = e_next;
      if (params.check_residual_first && et <= eps) {
        reached = true;
        break;
      }
    }
    if (stop) break;
    if (reached) {
      z = std::move(zt);
      ez = et;
    }
    ++s;
    if (reached) break;
  }

  rep.total_steps = total;
  rep.n_out = total;
  rep.s_out = s == 0 ? 0 : s - 1;
  rep.sigma_out = sigma_schedule(dc.sigma0, params.rho_sigma, rep.s_out);
  rep.eta_out = s == 0 ? params.eta0 : last_eta;
  if (stop) {
    rep.status = *stop;
    rep.z = std::move(best_overall);
  } else {
    rep.status = SolveStatus::kSolved;
    rep.z = std::move(z);
  }
  const KktBlocks k = kkt_blocks(p, rep.z);
  rep.e1 = residual_e1(k);
  rep.e2 = residual_e2(p, k);
  rep.e3 = residual_e3(k);
  rep.residual = residual(p, k, params.residual_kind);
  rep.objective = k.ctx;
  rep.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

}  // namespace agppa

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

#include <cstdint>
#include <random>
#include <vector>

#include "agppa/inner_problem.hpp"

namespace agppa {

enum class HoodKind { kApg, kRcd };

struct HoodConfig {
  HoodKind kind = HoodKind::kApg;
  // APG runs ceil(apg_factor * sigma * ||A||) + 2 iterations per call.
  double apg_factor = 3.0;
  // RCD runs ceil(rcd_factor * n * sqrt(1 + sigma^2 max_i ||a_i||^2))
  // coordinate updates per call.
  double rcd_factor = 3.0;
  std::uint64_t seed = 0;
};

int apg_iterations(const InnerInstance& inst, const HoodConfig& cfg = {});
long long rcd_epoch_length(const InnerInstance& inst, const HoodConfig& cfg = {});

// Work is counted in units of nnz(A) multiply-adds.
struct HoodResult {
  std::vector<double> x;
  double work = 0.0;
};

// Accelerated proximal gradient with constant momentum for the
// (1/sigma)-strongly convex composite F. Returns the start if the final
// iterate has a larger F.
HoodResult hood_apg(const InnerInstance& inst, const std::vector<double>& y,
                    const HoodConfig& cfg = {});

// One restart period of accelerated randomized coordinate descent with
// serial uniform sampling and coordinate constants L_i = sigma ||a_i||^2.
HoodResult hood_rcd(const InnerInstance& inst, const std::vector<double>& y, std::mt19937_64& rng,
                    const HoodConfig& cfg = {});
HoodResult hood_rcd(const InnerInstance& inst, const std::vector<double>& y, std::uint64_t seed,
                    const HoodConfig& cfg = {});

// Stateful dispatcher owning the RCD generator across calls.
class Hood {
 public:
  Hood(const InnerInstance& inst, HoodConfig cfg);

  HoodResult operator()(const std::vector<double>& y);
  // Cost of one call in nnz(A) units.
  double epoch_cost() const;
  const HoodConfig& config() const { return cfg_; }

 private:
  const InnerInstance* inst_;
  HoodConfig cfg_;
  std::mt19937_64 rng_;
};

}  // namespace agppa

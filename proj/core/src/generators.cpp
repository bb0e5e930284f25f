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

#include "agppa/generators.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "agppa/errors.hpp"

namespace agppa {
namespace {

void check_shape(int m, int n, double density) {
  if (m < 1 || n < 1) throw std::invalid_argument("generator: dimensions must be positive");
  if (!(density > 0.0 && density <= 1.0)) {
    throw std::invalid_argument("generator: density must lie in (0, 1]");
  }
}

// Distinct (row, col) positions: round(density m n) uniform draws with
// duplicates merged, plus one draw in each row left empty.
std::vector<std::pair<int, int>> random_pattern(int m, int n, double density,
                                                std::mt19937_64& rng) {
  const auto draws = static_cast<long long>(std::llround(density * m * n));
  std::uniform_int_distribution<int> row(0, m - 1);
  std::uniform_int_distribution<int> col(0, n - 1);
  std::set<std::pair<int, int>> pattern;
  for (long long k = 0; k < draws; ++k) {
    const int r = row(rng);
    pattern.insert({r, col(rng)});
  }
  std::vector<bool> used(m, false);
  for (const auto& [r, c] : pattern) used[r] = true;
  for (int r = 0; r < m; ++r) {
    if (!used[r]) pattern.insert({r, col(rng)});
  }
  return {pattern.begin(), pattern.end()};
}

}  // namespace

LpProblem gen_random_sparse_lp(int m, int n, double density, std::uint64_t seed,
                               GeneratorCertificate* cert) {
  check_shape(m, n, density);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal;

  std::vector<Triplet> t;
  for (const auto& [r, c] : random_pattern(m, n, density, rng)) {
    double v = 0.0;
    while (v == 0.0) v = 100.0 * (unit(rng) - 0.5);
    t.push_back({r, c, v});
  }
  SparseMatrix a(m, n, t);

  std::vector<double> x0(n);
  for (double& v : x0) v = normal(rng);
  std::vector<double> b = spmv(a, x0);
  for (double& v : b) v += 0.1 + unit(rng);

  // About a third of the rows carry positive dual weight.
  std::vector<double> lambda0(m, 0.0);
  for (double& v : lambda0) {
    if (unit(rng) < 1.0 / 3.0) v = unit(rng);
  }
  std::vector<double> c = spmv_t(a, lambda0);
  for (double& v : c) v = -v;
  if (cert != nullptr) *cert = {x0, lambda0};
  return LpProblem(std::move(c), std::move(a), std::move(b), SparseMatrix(0, n), {}, 0);
}

LpProblem gen_covering_lp(int m, int n, double density, std::uint64_t seed) {
  check_shape(m, n, density);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> col(0, n - 1);

  std::vector<std::pair<int, int>> ones;
  for (const auto& [r, c] : random_pattern(m, n, density, rng)) {
    if (std::round(unit(rng)) == 1.0) ones.push_back({r, c});
  }
  std::set<std::pair<int, int>> pattern(ones.begin(), ones.end());
  std::vector<bool> used(m, false);
  for (const auto& [r, c] : pattern) used[r] = true;
  for (int r = 0; r < m; ++r) {
    if (!used[r]) pattern.insert({r, col(rng)});
  }
  std::vector<Triplet> t;
  for (const auto& [r, c] : pattern) t.push_back({r, c, -1.0});

  std::vector<double> c(n);
  for (double& v : c) v = 1.0 - unit(rng);
  return LpProblem(std::move(c), SparseMatrix(m, n, t), std::vector<double>(m, -1.0),
                   SparseMatrix(0, n), {}, n);
}

LpProblem gen_mixed_lp(int n, int m_ineq, int m_eq, int n_b, std::uint64_t seed,
                       GeneratorCertificate* cert) {
  if (n < 1 || m_ineq < 0 || m_eq < 0 || m_eq >= n || n_b < 0 || n_b > n) {
    throw std::invalid_argument("gen_mixed_lp: invalid shape");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto dense = [&](int rows) {
    std::vector<Triplet> t;
    for (int r = 0; r < rows; ++r) {
      for (int j = 0; j < n; ++j) t.push_back({r, j, std::round(100.0 * sym(rng)) / 100.0});
    }
    return SparseMatrix(rows, n, t);
  };
  SparseMatrix a_ineq = dense(m_ineq);
  SparseMatrix a_eq = dense(m_eq);

  std::vector<double> x0(n);
  for (int j = 0; j < n; ++j) x0[j] = j < n_b ? 0.2 + unit(rng) : sym(rng);
  std::vector<double> b_ineq = spmv(a_ineq, x0);
  for (double& v : b_ineq) v += 0.1 + unit(rng);
  std::vector<double> b_eq = spmv(a_eq, x0);

  std::vector<double> lambda0(m_ineq + m_eq);
  for (int j = 0; j < m_ineq; ++j) lambda0[j] = unit(rng);
  for (int j = m_ineq; j < m_ineq + m_eq; ++j) lambda0[j] = sym(rng);
  const SparseMatrix a = SparseMatrix::VStack(a_ineq, a_eq);
  std::vector<double> c = spmv_t(a, lambda0);
  for (int j = 0; j < n; ++j) c[j] = -c[j] + (j < n_b ? 0.1 + unit(rng) : 0.0);
  if (cert != nullptr) *cert = {x0, lambda0};
  return LpProblem(std::move(c), std::move(a_ineq), std::move(b_ineq), std::move(a_eq),
                   std::move(b_eq), n_b);
}

void normalize_samples(std::vector<std::vector<double>>& samples, SvmNormalization mode) {
  if (mode == SvmNormalization::kNone) return;
  for (auto& x : samples) {
    if (x.empty()) continue;
    if (mode == SvmNormalization::kDense) {
      double mean = 0.0;
      for (double v : x) mean += v;
      mean /= static_cast<double>(x.size());
      for (double& v : x) v -= mean;
    }
    double norm = 0.0;
    for (double v : x) norm += v * v;
    norm = std::sqrt(norm);
    if (norm > 0.0) {
      for (double& v : x) v /= norm;
    }
  }
}

LpProblem l1svm_to_lp(const std::vector<std::vector<double>>& samples,
                      const std::vector<int>& labels, double penalty) {
  if (samples.size() != labels.size()) {
    throw std::invalid_argument("l1svm_to_lp: samples and labels differ in length");
  }
  if (samples.empty()) throw std::invalid_argument("l1svm_to_lp: no samples");
  if (!(penalty > 0.0)) throw std::invalid_argument("l1svm_to_lp: penalty must be positive");
  const int p_n = static_cast<int>(samples.size());
  const int p_d = static_cast<int>(samples.front().size());
  int k = 0;
  for (int y : labels) {
    if (y < 1) throw std::invalid_argument("l1svm_to_lp: labels must be 1..k");
    k = std::max(k, y);
  }
  if (k < 2) throw std::invalid_argument("l1svm_to_lp: at least two classes required");
  for (const auto& x : samples) {
    if (static_cast<int>(x.size()) != p_d) {
      throw std::invalid_argument("l1svm_to_lp: samples differ in length");
    }
  }

  const int n = 2 * k * p_d + p_n;
  auto w_plus = [&](int cls, int f) { return (cls - 1) * p_d + f; };
  auto w_minus = [&](int cls, int f) { return k * p_d + (cls - 1) * p_d + f; };
  auto xi = [&](int i) { return 2 * k * p_d + i; };

  std::vector<Triplet> t;
  int row = 0;
  for (int i = 0; i < p_n; ++i) {
    const int yi = labels[i];
    for (int j = 1; j <= k; ++j) {
      if (j == yi) continue;
      for (int f = 0; f < p_d; ++f) {
        const double v = samples[i][f];
        if (v == 0.0) continue;
        t.push_back({row, w_plus(yi, f), -v});
        t.push_back({row, w_minus(yi, f), v});
        t.push_back({row, w_plus(j, f), v});
        t.push_back({row, w_minus(j, f), -v});
      }
      t.push_back({row, xi(i), -1.0});
      ++row;
    }
  }
  std::vector<double> c(n, penalty);
  for (int i = 0; i < p_n; ++i) c[xi(i)] = 1.0;
  return LpProblem(std::move(c), SparseMatrix(row, n, t), std::vector<double>(row, -1.0),
                   SparseMatrix(0, n), {}, n);
}

SvmData read_svm_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  SvmData data;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#' || line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> values;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw InputError(path + ":" + std::to_string(line_no) + ": bad number '" + cell + "'");
      }
    }
    if (values.size() < 2) {
      throw InputError(path + ":" + std::to_string(line_no) + ": need a label and features");
    }
    const double label = values.front();
    if (label != std::round(label) || label < 1) {
      throw InputError(path + ":" + std::to_string(line_no) + ": label must be a positive integer");
    }
    data.labels.push_back(static_cast<int>(label));
    data.samples.emplace_back(values.begin() + 1, values.end());
    if (data.samples.back().size() != data.samples.front().size()) {
      throw InputError(path + ":" + std::to_string(line_no) + ": feature count differs");
    }
  }
  if (data.samples.empty()) throw InputError("'" + path + "' holds no samples");
  return data;
}

}  // namespace agppa

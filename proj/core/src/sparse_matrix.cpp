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

#include "agppa/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace agppa {

SparseMatrix::SparseMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), col_start_(cols + 1, 0), row_start_(rows + 1, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("SparseMatrix: negative dimension");
}

SparseMatrix::SparseMatrix(int rows, int cols, std::span<const Triplet> triplets)
    : SparseMatrix(rows, cols) {
  std::vector<Triplet> sorted;
  sorted.reserve(triplets.size());
  for (const Triplet& t : triplets) {
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols) {
      throw std::invalid_argument("SparseMatrix: entry (" + std::to_string(t.row) + ", " +
                                  std::to_string(t.col) + ") out of range");
    }
    if (!std::isfinite(t.value)) {
      throw std::invalid_argument("SparseMatrix: non-finite entry");
    }
    sorted.push_back(t);
  }
  std::sort(sorted.begin(), sorted.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (sorted[k].col == sorted[k - 1].col && sorted[k].row == sorted[k - 1].row) {
      throw std::invalid_argument("SparseMatrix: duplicate entry (" +
                                  std::to_string(sorted[k].row) + ", " +
                                  std::to_string(sorted[k].col) + ")");
    }
  }
  std::erase_if(sorted, [](const Triplet& t) { return t.value == 0.0; });

  col_rows_.reserve(sorted.size());
  col_values_.reserve(sorted.size());
  for (const Triplet& t : sorted) {
    ++col_start_[t.col + 1];
    ++row_start_[t.row + 1];
    col_rows_.push_back(t.row);
    col_values_.push_back(t.value);
  }
  std::partial_sum(col_start_.begin(), col_start_.end(), col_start_.begin());
  std::partial_sum(row_start_.begin(), row_start_.end(), row_start_.begin());

  // Walking columns in order fills each row with increasing column index.
  row_cols_.resize(sorted.size());
  row_values_.resize(sorted.size());
  std::vector<int> cursor(row_start_.begin(), row_start_.end() - 1);
  for (int j = 0; j < cols_; ++j) {
    for (int k = col_start_[j]; k < col_start_[j + 1]; ++k) {
      const int pos = cursor[col_rows_[k]]++;
      row_cols_[pos] = j;
      row_values_[pos] = col_values_[k];
    }
  }
}

SparseMatrix SparseMatrix::Identity(int n) {
  std::vector<Triplet> t;
  t.reserve(n);
  for (int i = 0; i < n; ++i) t.push_back({i, i, 1.0});
  return SparseMatrix(n, n, t);
}

SparseMatrix SparseMatrix::VStack(const SparseMatrix& top, const SparseMatrix& bottom) {
  if (top.cols() != bottom.cols()) {
    throw std::invalid_argument("SparseMatrix::VStack: column count mismatch");
  }
  std::vector<Triplet> t = top.Triplets();
  for (Triplet e : bottom.Triplets()) {
    e.row += top.rows();
    t.push_back(e);
  }
  return SparseMatrix(top.rows() + bottom.rows(), top.cols(), t);
}

SparseMatrix::Slice SparseMatrix::column(int j) const {
  const auto begin = static_cast<std::size_t>(col_start_[j]);
  const auto len = static_cast<std::size_t>(col_start_[j + 1] - col_start_[j]);
  return {std::span<const int>(col_rows_).subspan(begin, len),
          std::span<const double>(col_values_).subspan(begin, len)};
}

SparseMatrix::Slice SparseMatrix::row(int i) const {
  const auto begin = static_cast<std::size_t>(row_start_[i]);
  const auto len = static_cast<std::size_t>(row_start_[i + 1] - row_start_[i]);
  return {std::span<const int>(row_cols_).subspan(begin, len),
          std::span<const double>(row_values_).subspan(begin, len)};
}

SparseMatrix SparseMatrix::Transposed() const {
  std::vector<Triplet> t;
  t.reserve(nnz());
  for (int j = 0; j < cols_; ++j) {
    const Slice c = column(j);
    for (std::size_t k = 0; k < c.indices.size(); ++k) t.push_back({j, c.indices[k], c.values[k]});
  }
  return SparseMatrix(cols_, rows_, t);
}

SparseMatrix SparseMatrix::Scaled(double factor) const {
  std::vector<Triplet> t = Triplets();
  for (Triplet& e : t) e.value *= factor;
  return SparseMatrix(rows_, cols_, t);
}

std::vector<Triplet> SparseMatrix::Triplets() const {
  std::vector<Triplet> t;
  t.reserve(nnz());
  for (int i = 0; i < rows_; ++i) {
    const Slice r = row(i);
    for (std::size_t k = 0; k < r.indices.size(); ++k) t.push_back({i, r.indices[k], r.values[k]});
  }
  return t;
}

double SparseMatrix::FrobeniusNorm() const {
  double sum = 0.0;
  for (double v : col_values_) sum += v * v;
  return std::sqrt(sum);
}

std::vector<double> SparseMatrix::ColumnNormsSquared() const {
  std::vector<double> out(cols_, 0.0);
  for (int j = 0; j < cols_; ++j) {
    for (double v : column(j).values) out[j] += v * v;
  }
  return out;
}

bool SparseMatrix::operator==(const SparseMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && col_start_ == other.col_start_ &&
         col_rows_ == other.col_rows_ && col_values_ == other.col_values_;
}

void spmv(const SparseMatrix& a, std::span<const double> x, std::span<double> y) {
  if (x.size() != static_cast<std::size_t>(a.cols()) ||
      y.size() != static_cast<std::size_t>(a.rows())) {
    throw std::invalid_argument("spmv: dimension mismatch");
  }
  for (int i = 0; i < a.rows(); ++i) {
    const auto r = a.row(i);
    double sum = 0.0;
    for (std::size_t k = 0; k < r.indices.size(); ++k) sum += r.values[k] * x[r.indices[k]];
    y[i] = sum;
  }
}

std::vector<double> spmv(const SparseMatrix& a, std::span<const double> x) {
  std::vector<double> y(a.rows());
  spmv(a, x, y);
  return y;
}

void spmv_t(const SparseMatrix& a, std::span<const double> y, std::span<double> x) {
  if (y.size() != static_cast<std::size_t>(a.rows()) ||
      x.size() != static_cast<std::size_t>(a.cols())) {
    throw std::invalid_argument("spmv_t: dimension mismatch");
  }
  for (int j = 0; j < a.cols(); ++j) {
    const auto c = a.column(j);
    double sum = 0.0;
    for (std::size_t k = 0; k < c.indices.size(); ++k) sum += c.values[k] * y[c.indices[k]];
    x[j] = sum;
  }
}

std::vector<double> spmv_t(const SparseMatrix& a, std::span<const double> y) {
  std::vector<double> x(a.cols());
  spmv_t(a, y, x);
  return x;
}

double spectral_norm_estimate(const SparseMatrix& a, int iterations, std::uint64_t seed) {
  if (a.empty()) return 0.0;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<double> v(a.cols());
  for (double& e : v) e = normal(rng);
  std::vector<double> u(a.rows());

  auto normalize = [](std::vector<double>& w) {
    double n = 0.0;
    for (double e : w) n += e * e;
    n = std::sqrt(n);
    if (n > 0.0) {
      for (double& e : w) e /= n;
    }
    return n;
  };
  if (normalize(v) == 0.0) return 0.0;

  for (int k = 0; k < iterations; ++k) {
    spmv(a, v, u);
    spmv_t(a, u, v);
    if (normalize(v) == 0.0) return 0.0;
  }
  spmv(a, v, u);
  double norm = 0.0;
  for (double e : u) norm += e * e;
  return std::sqrt(norm) * kSpectralSafetyFactor;
}

}  // namespace agppa

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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace agppa {

struct Triplet {
  int row = 0;
  int col = 0;
  double value = 0.0;
};

// Immutable sparse matrix stored twice: compressed columns for A^T y and
// compressed rows for A x. Indices inside each column/row are strictly
// increasing and explicit zeros are never stored.
class SparseMatrix {
 public:
  struct Slice {
    std::span<const int> indices;
    std::span<const double> values;
  };

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols);
  // Throws std::invalid_argument on out-of-range indices or duplicate
  // (row, col) pairs. Zero values are dropped.
  SparseMatrix(int rows, int cols, std::span<const Triplet> triplets);

  static SparseMatrix Identity(int n);
  static SparseMatrix VStack(const SparseMatrix& top, const SparseMatrix& bottom);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const { return col_values_.size(); }
  bool empty() const { return nnz() == 0; }

  Slice column(int j) const;
  Slice row(int i) const;

  SparseMatrix Transposed() const;
  SparseMatrix Scaled(double factor) const;
  // Row-major triplet list.
  std::vector<Triplet> Triplets() const;

  double FrobeniusNorm() const;
  std::vector<double> ColumnNormsSquared() const;

  bool operator==(const SparseMatrix& other) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> col_start_{0};
  std::vector<int> col_rows_;
  std::vector<double> col_values_;
  std::vector<int> row_start_{0};
  std::vector<int> row_cols_;
  std::vector<double> row_values_;
};

// y = A x. Throws std::invalid_argument on dimension mismatch.
std::vector<double> spmv(const SparseMatrix& a, std::span<const double> x);
void spmv(const SparseMatrix& a, std::span<const double> x, std::span<double> y);
// x = A^T y.
std::vector<double> spmv_t(const SparseMatrix& a, std::span<const double> y);
void spmv_t(const SparseMatrix& a, std::span<const double> y, std::span<double> x);

inline constexpr double kSpectralSafetyFactor = 1.02;
inline constexpr int kSpectralIterations = 50;
inline constexpr std::uint64_t kSpectralSeed = 0x5eed5eedULL;

// Power iteration on A^T A from a seeded Gaussian start, scaled by
// kSpectralSafetyFactor. Returns 0 for a matrix without entries.
double spectral_norm_estimate(const SparseMatrix& a, int iterations = kSpectralIterations,
                              std::uint64_t seed = kSpectralSeed);

}  // namespace agppa

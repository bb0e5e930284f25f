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

#include <gtest/gtest.h>

#include <cstring>
#include <random>
#include <set>

#include "agppa/sparse_matrix.hpp"
#include "oracles.hpp"

namespace agppa {
namespace {

SparseMatrix random_matrix(int rows, int cols, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::bernoulli_distribution keep(density);
  std::vector<Triplet> t;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (keep(rng)) t.push_back({i, j, u(rng)});
    }
  }
  return SparseMatrix(rows, cols, t);
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

TEST(SparseMatrix, ScalarProduct) {
  const std::vector<Triplet> t{{0, 0, 2.0}};
  const SparseMatrix a(1, 1, t);
  EXPECT_EQ(spmv(a, std::vector<double>{3.0}), std::vector<double>{6.0});
}

TEST(SparseMatrix, IdentityProduct) {
  const SparseMatrix a = SparseMatrix::Identity(3);
  const std::vector<double> x{1.0, 2.0, 3.0};
  EXPECT_EQ(spmv(a, x), x);
  EXPECT_EQ(spmv_t(a, x), x);
}

TEST(SparseMatrix, RandomProductsMatchDenseBitwise) {
  const SparseMatrix a = random_matrix(5, 4, 0.5, 7);
  const Eigen::MatrixXd d = test::to_dense(a);
  const std::vector<double> x{0.3, -1.7, 2.5, 0.9};
  const std::vector<double> y{1.1, -0.4, 0.7, 2.2, -3.1};
  EXPECT_TRUE(bitwise_equal(spmv(a, x), test::dense_matvec(d, x)));
  EXPECT_TRUE(bitwise_equal(spmv_t(a, y), test::dense_matvec_t(d, y)));
}

TEST(SparseMatrix, HundredSeedsMatchDenseBitwise) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SparseMatrix a = random_matrix(7, 9, 0.4, seed);
    const Eigen::MatrixXd d = test::to_dense(a);
    std::mt19937_64 rng(seed + 1000);
    std::normal_distribution<double> g;
    std::vector<double> x(9);
    std::vector<double> y(7);
    for (double& v : x) v = g(rng);
    for (double& v : y) v = g(rng);
    ASSERT_TRUE(bitwise_equal(spmv(a, x), test::dense_matvec(d, x))) << "seed " << seed;
    ASSERT_TRUE(bitwise_equal(spmv_t(a, y), test::dense_matvec_t(d, y))) << "seed " << seed;
  }
}

TEST(SparseMatrix, StorageInvariants) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SparseMatrix a = random_matrix(6, 8, 0.5, seed);
    std::size_t nnz_cols = 0;
    std::multiset<double> col_vals;
    for (int j = 0; j < a.cols(); ++j) {
      const auto c = a.column(j);
      for (std::size_t k = 0; k < c.indices.size(); ++k) {
        if (k > 0) {
          EXPECT_LT(c.indices[k - 1], c.indices[k]);
        }
        EXPECT_NE(c.values[k], 0.0);
        col_vals.insert(c.values[k]);
      }
      nnz_cols += c.indices.size();
    }
    std::size_t nnz_rows = 0;
    std::multiset<double> row_vals;
    for (int i = 0; i < a.rows(); ++i) {
      const auto r = a.row(i);
      for (std::size_t k = 0; k < r.indices.size(); ++k) {
        if (k > 0) {
          EXPECT_LT(r.indices[k - 1], r.indices[k]);
        }
        row_vals.insert(r.values[k]);
      }
      nnz_rows += r.indices.size();
    }
    EXPECT_EQ(nnz_cols, a.nnz());
    EXPECT_EQ(nnz_rows, a.nnz());
    EXPECT_EQ(col_vals, row_vals);
  }
}

TEST(SparseMatrix, DropsExplicitZeros) {
  const std::vector<Triplet> t{{0, 0, 0.0}, {1, 1, 4.0}};
  const SparseMatrix a(2, 2, t);
  EXPECT_EQ(a.nnz(), 1u);
}

TEST(SparseMatrix, RejectsDuplicatesAndOutOfRange) {
  const std::vector<Triplet> dup{{0, 0, 1.0}, {0, 0, 2.0}};
  EXPECT_THROW(SparseMatrix(1, 1, dup), std::invalid_argument);
  const std::vector<Triplet> out{{2, 0, 1.0}};
  EXPECT_THROW(SparseMatrix(2, 2, out), std::invalid_argument);
}

TEST(SparseMatrix, DimensionMismatchThrows) {
  const SparseMatrix a = SparseMatrix::Identity(3);
  EXPECT_THROW(spmv(a, std::vector<double>(2)), std::invalid_argument);
  EXPECT_THROW(spmv_t(a, std::vector<double>(4)), std::invalid_argument);
}

TEST(SparseMatrix, VStackAndTranspose) {
  const SparseMatrix a = random_matrix(3, 4, 0.6, 11);
  const SparseMatrix b = random_matrix(2, 4, 0.6, 12);
  const SparseMatrix s = SparseMatrix::VStack(a, b);
  ASSERT_EQ(s.rows(), 5);
  const Eigen::MatrixXd ds = test::to_dense(s);
  EXPECT_EQ(ds.topRows(3), test::to_dense(a));
  EXPECT_EQ(ds.bottomRows(2), test::to_dense(b));
  EXPECT_EQ(test::to_dense(s.Transposed()), ds.transpose());
}

TEST(SpectralNorm, Scalar) {
  const std::vector<Triplet> t{{0, 0, 3.0}};
  EXPECT_DOUBLE_EQ(spectral_norm_estimate(SparseMatrix(1, 1, t)), 3.0 * 1.02);
}

TEST(SpectralNorm, Diagonal) {
  const std::vector<Triplet> t{{0, 0, 1.0}, {1, 1, 5.0}};
  EXPECT_NEAR(spectral_norm_estimate(SparseMatrix(2, 2, t), 20), 5.0 * 1.02, 1e-6);
}

TEST(SpectralNorm, ZeroMatrix) { EXPECT_EQ(spectral_norm_estimate(SparseMatrix(3, 2)), 0.0); }

TEST(SpectralNorm, RandomWithinSvdBand) {
  const SparseMatrix a = random_matrix(20, 30, 0.3, 1);
  const double s_max = test::svd_norm(a);
  const double est = spectral_norm_estimate(a);
  EXPECT_GE(est, 0.99 * s_max);
  EXPECT_LE(est, 1.05 * s_max);
}

TEST(SpectralNorm, CorpusLowerBound) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const SparseMatrix a = random_matrix(12, 15, 0.3, seed + 50);
    EXPECT_GE(spectral_norm_estimate(a), 0.99 * test::svd_norm(a)) << "seed " << seed;
  }
}

}  // namespace
}  // namespace agppa

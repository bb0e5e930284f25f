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

#include <cmath>
#include <filesystem>
#include <fstream>

#include "agppa/errors.hpp"
#include "agppa/generators.hpp"
#include "agppa/oracle.hpp"
#include "oracles.hpp"

namespace agppa {
namespace {

void expect_certificate(const LpProblem& p, const GeneratorCertificate& cert) {
  ASSERT_EQ(static_cast<int>(cert.x0.size()), p.n());
  ASSERT_EQ(static_cast<int>(cert.lambda0.size()), p.m());
  const std::vector<double> ax = spmv(p.a(), cert.x0);
  for (int j = 0; j < p.m_ineq(); ++j) EXPECT_LT(ax[j], p.b()[j]);
  for (int j = p.m_ineq(); j < p.m(); ++j) {
    EXPECT_NEAR(ax[j], p.b()[j], 1e-12 * (1.0 + std::abs(p.b()[j])));
  }
  for (int i = 0; i < p.n_b(); ++i) EXPECT_GE(cert.x0[i], 0.0);
  for (int j = 0; j < p.m_ineq(); ++j) EXPECT_GE(cert.lambda0[j], 0.0);
  const std::vector<double> aty = spmv_t(p.a(), cert.lambda0);
  for (int i = 0; i < p.n(); ++i) {
    const double r = aty[i] + p.c()[i];
    if (i < p.n_b()) {
      EXPECT_GE(r, -1e-12);
    } else {
      EXPECT_NEAR(r, 0.0, 1e-10 * (1.0 + std::abs(p.c()[i])));
    }
  }
}

TEST(RandomSparse, ShapeAndCertificate) {
  GeneratorCertificate cert;
  const LpProblem p = gen_random_sparse_lp(40, 60, 0.05, 3, &cert);
  EXPECT_EQ(p.m_ineq(), 40);
  EXPECT_EQ(p.m_eq(), 0);
  EXPECT_EQ(p.n_b(), 0);
  for (int i = 0; i < p.m(); ++i) EXPECT_FALSE(p.a().row(i).indices.empty());
  for (int j = 0; j < p.n(); ++j) {
    for (double v : p.a().column(j).values) {
      EXPECT_GE(v, -50.0);
      EXPECT_LE(v, 50.0);
    }
  }
  expect_certificate(p, cert);
}

TEST(RandomSparse, Reproducible) {
  EXPECT_EQ(gen_random_sparse_lp(20, 30, 0.1, 7), gen_random_sparse_lp(20, 30, 0.1, 7));
  EXPECT_FALSE(gen_random_sparse_lp(20, 30, 0.1, 7) == gen_random_sparse_lp(20, 30, 0.1, 8));
}

TEST(Covering, Structure) {
  const LpProblem p = gen_covering_lp(30, 50, 0.1, 4);
  EXPECT_EQ(p.n_b(), 50);
  EXPECT_EQ(p.b_ineq(), std::vector<double>(30, -1.0));
  for (int i = 0; i < p.m(); ++i) {
    EXPECT_FALSE(p.a().row(i).indices.empty());
    for (double v : p.a().row(i).values) EXPECT_EQ(v, -1.0);
  }
  for (double c : p.c()) {
    EXPECT_GT(c, 0.0);
    EXPECT_LE(c, 1.0);
  }
  EXPECT_EQ(p, gen_covering_lp(30, 50, 0.1, 4));
}

TEST(Covering, SmallInstanceSolvedByOracle) {
  const LpProblem p = gen_covering_lp(4, 6, 0.5, 2);
  const OracleSolution s = vertex_enum_solve(p);
  // Every row covered: A x >= e at the optimum.
  const std::vector<double> ax = spmv(p.a(), s.x);
  for (double v : ax) EXPECT_LE(v, -1.0 + 1e-9);
  EXPECT_GT(s.objective, 0.0);
}

TEST(Mixed, CertificatesAcrossShapes) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const int m_eq = static_cast<int>(seed % 2) * std::min(2, n - 1);
    const int n_b = static_cast<int>(seed % (n + 1));
    GeneratorCertificate cert;
    const LpProblem p = gen_mixed_lp(n, 5, m_eq, n_b, seed, &cert);
    EXPECT_EQ(p.n(), n);
    EXPECT_EQ(p.n_b(), n_b);
    EXPECT_EQ(p.m_eq(), m_eq);
    expect_certificate(p, cert);
  }
}

TEST(Mixed, RejectsTooManyEqualities) {
  EXPECT_THROW(gen_mixed_lp(3, 2, 3, 0, 1), std::invalid_argument);
}

TEST(Svm, ShapeForTwoClassesOneFeature) {
  // One sample of class 2 out of k = 2 classes, one feature.
  const LpProblem p = l1svm_to_lp({{1.0}}, {2});
  EXPECT_EQ(p.n(), 5);
  EXPECT_EQ(p.n_b(), 5);
  EXPECT_EQ(p.m_ineq(), 1);
  EXPECT_EQ(p.m_eq(), 0);
}

TEST(Svm, VariableLayout) {
  EXPECT_THROW(l1svm_to_lp({{2.0}}, {1}), std::invalid_argument);
  EXPECT_THROW(l1svm_to_lp({{2.0}, {1.0, 0.0}}, {1, 2}), std::invalid_argument);
  const LpProblem p = l1svm_to_lp({{2.0}, {-1.0}}, {1, 2}, 0.5);
  // w+ (2), w- (2), xi (2).
  EXPECT_EQ(p.n(), 6);
  EXPECT_EQ(p.n_b(), 6);
  EXPECT_EQ(p.m_ineq(), 2);
  EXPECT_EQ(p.c(), (std::vector<double>{0.5, 0.5, 0.5, 0.5, 1.0, 1.0}));
  // Sample 0 (class 1) against class 2:
  //   -2 w+_1 + 2 w+_2 + 2 w-_1 - 2 w-_2 - xi_0 <= -1.
  Eigen::MatrixXd a(2, 6);
  a << -2.0, 2.0, 2.0, -2.0, -1.0, 0.0,
       -1.0, 1.0, 1.0, -1.0, 0.0, -1.0;
  EXPECT_EQ(test::to_dense(p.a_ineq()), a);
  EXPECT_EQ(p.b_ineq(), (std::vector<double>{-1.0, -1.0}));
}

TEST(Svm, ZeroDataGivesUnitSlack) {
  const LpProblem p = l1svm_to_lp({{0.0}, {0.0}}, {1, 2});
  const OracleSolution s = vertex_enum_solve(p);
  EXPECT_NEAR(s.objective, 2.0, 1e-9);
  EXPECT_NEAR(s.x[4], 1.0, 1e-9);
  EXPECT_NEAR(s.x[5], 1.0, 1e-9);
}

TEST(Svm, Normalization) {
  std::vector<std::vector<double>> dense{{1.0, 3.0}, {0.0, 0.0}};
  normalize_samples(dense, SvmNormalization::kDense);
  EXPECT_NEAR(dense[0][0], -std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(dense[0][1], std::sqrt(0.5), 1e-15);
  EXPECT_EQ(dense[1], (std::vector<double>{0.0, 0.0}));
  std::vector<std::vector<double>> sparse{{3.0, 0.0, 4.0}};
  normalize_samples(sparse, SvmNormalization::kSparse);
  EXPECT_NEAR(sparse[0][0], 0.6, 1e-15);
  EXPECT_EQ(sparse[0][1], 0.0);
  EXPECT_NEAR(sparse[0][2], 0.8, 1e-15);
}

TEST(Svm, CsvReader) {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "agppa_test_svm.csv";
  {
    std::ofstream out(path);
    out << "# label,f1,f2\n1,0.5,1.5\n\n2,-1,2\n";
  }
  const SvmData d = read_svm_csv(path.string());
  EXPECT_EQ(d.labels, (std::vector<int>{1, 2}));
  EXPECT_EQ(d.samples[1], (std::vector<double>{-1.0, 2.0}));
  {
    std::ofstream out(path);
    out << "1,0.5\n2,1,2\n";
  }
  EXPECT_THROW(read_svm_csv(path.string()), InputError);
  std::filesystem::remove(path);
  EXPECT_THROW(read_svm_csv(path.string()), InputError);
}

}  // namespace
}  // namespace agppa

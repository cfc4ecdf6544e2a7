// Copyright 2026 The KAF Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kaf/kernels.h"

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "kaf/errors.h"
#include "test_util.h"

namespace kaf {
namespace {

using ::kaf::testing::RandomVector;
using ::kaf::testing::RelativeError;

TEST(InputVectorTest, CachesEuclideanNorm) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const InputVector x = RandomVector(rng, 1 + trial % 10);
    long double sum = 0.0L;
    for (double v : x.values()) sum += static_cast<long double>(v) * v;
    EXPECT_LE(RelativeError(x.norm(), static_cast<double>(std::sqrt(sum))),
              1e-12);
  }
}

TEST(GaussianEvalTest, IdenticalInputsGiveOne) {
  const InputVector x{0.3, -2.0, 5.0};
  EXPECT_EQ(GaussianEval(x, x, 0.1), 1.0);
  EXPECT_EQ(GaussianEval(x, x, 10.0), 1.0);
}

TEST(GaussianEvalTest, ClosedFormValues) {
  // ||[1,0] - [0,1]||^2 = 2, so the exponent is -2 / 2.
  EXPECT_DOUBLE_EQ(GaussianEval({1.0, 0.0}, {0.0, 1.0}, 1.0), std::exp(-1.0));
  EXPECT_NEAR(GaussianEval({1.0, 0.0}, {0.0, 1.0}, 1.0), 0.3678794, 1e-7);
  // ||0 - 10||^2 = 100.
  EXPECT_DOUBLE_EQ(GaussianEval({0.0}, {10.0}, 1.0), std::exp(-50.0));
  EXPECT_NEAR(GaussianEval({0.0}, {10.0}, 1.0) / 1.93e-22, 1.0, 1e-2);
}

TEST(GaussianEvalTest, RejectsBadArguments) {
  EXPECT_THROW(GaussianEval({1.0}, {1.0, 2.0}, 1.0), ContractError);
  EXPECT_THROW(GaussianEval({1.0}, {2.0}, 0.0), ConfigError);
  EXPECT_THROW(GaussianEval({1.0}, {2.0}, -1.0), ConfigError);
}

TEST(NormalizeTest, ThreeFourFive) {
  const NormalizedInput n = Normalize({3.0, 4.0});
  EXPECT_FALSE(n.degenerate);
  EXPECT_DOUBLE_EQ(n.direction[0], 0.6);
  EXPECT_DOUBLE_EQ(n.direction[1], 0.8);
  EXPECT_NEAR(n.direction.norm(), 1.0, 1e-12);
}

TEST(NormalizeTest, UnitVectorIsFixedPoint) {
  const InputVector u{0.6, 0.8};
  const NormalizedInput n = Normalize(u);
  EXPECT_DOUBLE_EQ(n.direction[0], 0.6);
  EXPECT_DOUBLE_EQ(n.direction[1], 0.8);
}

TEST(NormalizeTest, ZeroVectorIsDegenerate) {
  const NormalizedInput n = Normalize({0.0, 0.0});
  EXPECT_TRUE(n.degenerate);
  EXPECT_EQ(n.direction, (InputVector{0.0, 0.0}));
  EXPECT_TRUE(Normalize({1e-13, 0.0}).degenerate);
}

TEST(NormalizeTest, RandomInputsArePositivelyCollinearUnitVectors) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const InputVector x = RandomVector(rng, 1 + trial % 7);
    const NormalizedInput n = Normalize(x);
    ASSERT_FALSE(n.degenerate);
    EXPECT_NEAR(n.direction.norm(), 1.0, 1e-12);
    double dot = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) dot += x[i] * n.direction[i];
    EXPECT_LE(RelativeError(dot, x.norm()), 1e-12);
  }
}

TEST(UnitNormGaussianEvalTest, SelfEvaluationIsSquaredNorm) {
  EXPECT_DOUBLE_EQ(UnitNormGaussianEval({3.0, 4.0}, {3.0, 4.0}, 0.7), 25.0);
}

TEST(UnitNormGaussianEvalTest, OrthogonalInputs) {
  // Directions [1,0] and [0,1] are sqrt(2) apart; prefactor 3 * 4.
  EXPECT_DOUBLE_EQ(UnitNormGaussianEval({3.0, 0.0}, {0.0, 4.0}, 1.0),
                   12.0 * std::exp(-1.0));
  EXPECT_NEAR(UnitNormGaussianEval({3.0, 0.0}, {0.0, 4.0}, 1.0), 4.414553,
              1e-6);
}

TEST(UnitNormGaussianEvalTest, ZeroArgumentGivesZero) {
  EXPECT_EQ(UnitNormGaussianEval({0.0, 0.0}, {1.0, 2.0}, 1.0), 0.0);
  EXPECT_EQ(UnitNormGaussianEval({1.0, 2.0}, {0.0, 0.0}, 1.0), 0.0);
  EXPECT_THROW(UnitNormGaussianEval({1.0}, {1.0, 2.0}, 1.0), ContractError);
  EXPECT_THROW(UnitNormGaussianEval({1.0}, {2.0}, 0.0), ConfigError);
}

TEST(LengthscaleFromDimTest, Values) {
  EXPECT_DOUBLE_EQ(LengthscaleFromDim(2.0, 4), 4.0);
  EXPECT_DOUBLE_EQ(LengthscaleFromDim(1.0, 1), 1.0);
  EXPECT_DOUBLE_EQ(LengthscaleFromDim(3.0, 9), 9.0);
  EXPECT_THROW(LengthscaleFromDim(0.0, 4), ConfigError);
  EXPECT_THROW(LengthscaleFromDim(-1.0, 4), ConfigError);
  EXPECT_THROW(LengthscaleFromDim(1.0, 0), ConfigError);
}

TEST(KernelSpecTest, UnitNormUsesHeuristic) {
  const KernelSpec spec = KernelSpec::UnitNormGaussian(2.0, 9);
  EXPECT_EQ(spec.kind(), KernelKind::kUnitNormGaussian);
  EXPECT_DOUBLE_EQ(spec.lengthscale(), 6.0);
  EXPECT_DOUBLE_EQ(spec.per_coordinate(), 2.0);
  EXPECT_TRUE(spec.lengthscale_from_heuristic());
  EXPECT_THROW(KernelSpec::Gaussian(0.0, 2), ConfigError);
  EXPECT_THROW(KernelSpec::Gaussian(1.0, 0), ConfigError);
}

TEST(GramMatrixTest, SinglePoint) {
  const std::vector<InputVector> one{{0.5, -1.0}};
  EXPECT_EQ(GramMatrix(one, KernelSpec::Gaussian(1.0, 2))(0, 0), 1.0);
  const std::vector<InputVector> ug{{3.0, 4.0}};
  EXPECT_DOUBLE_EQ(GramMatrix(ug, KernelSpec::UnitNormGaussian(1.0, 2))(0, 0),
                   25.0);
}

TEST(GramMatrixTest, RejectsMixedDimensions) {
  const std::vector<InputVector> points{{1.0, 2.0}, {1.0}};
  EXPECT_THROW(GramMatrix(points, KernelSpec::Gaussian(1.0, 2)),
               ContractError);
  EXPECT_THROW(GramMatrix({}, KernelSpec::Gaussian(1.0, 2)), ContractError);
}

double MinEigenvalue(const Eigen::MatrixXd& m) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues().minCoeff();
}

TEST(GramMatrixTest, FiveRandomPointsArePositiveSemidefinite) {
  std::mt19937_64 rng(3);
  std::vector<InputVector> points;
  for (int i = 0; i < 5; ++i) points.push_back(RandomVector(rng, 3, -1, 1));
  for (const KernelSpec& spec :
       {KernelSpec::Gaussian(1.0, 3), KernelSpec::UnitNormGaussian(1.0, 3)}) {
    const Eigen::MatrixXd g = GramMatrix(points, spec);
    EXPECT_TRUE(g.isApprox(g.transpose(), 0.0));
    EXPECT_GE(MinEigenvalue(g), -1e-9);
  }
}

// Properties over random inputs.

TEST(KernelPropertyTest, SymmetryIsExact) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const int dim = 1 + trial % 10;
    const InputVector a = RandomVector(rng, dim);
    const InputVector b = RandomVector(rng, dim);
    EXPECT_EQ(GaussianEval(a, b, 3.0), GaussianEval(b, a, 3.0));
    EXPECT_EQ(UnitNormGaussianEval(a, b, 0.8), UnitNormGaussianEval(b, a, 0.8));
  }
}

TEST(KernelPropertyTest, UnitNormFactorizesThroughGaussian) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    const int dim = 1 + trial % 10;
    const InputVector a = RandomVector(rng, dim);
    const InputVector b = RandomVector(rng, dim);
    const double l = 0.5 + trial % 3;
    const double expected = a.norm() *
                            GaussianEval(Normalize(a).direction,
                                         Normalize(b).direction, l) *
                            b.norm();
    EXPECT_LE(RelativeError(UnitNormGaussianEval(a, b, l), expected), 1e-12);
  }
}

TEST(KernelPropertyTest, UnitNormScalesWithBothMagnitudes) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> log_scale(-3.0, 3.0);
  for (int trial = 0; trial < 500; ++trial) {
    const int dim = 1 + trial % 10;
    const InputVector a = RandomVector(rng, dim);
    const InputVector b = RandomVector(rng, dim);
    const double sa = std::pow(10.0, log_scale(rng));
    const double sb = std::pow(10.0, log_scale(rng));
    std::vector<double> as(a.values().begin(), a.values().end());
    std::vector<double> bs(b.values().begin(), b.values().end());
    for (double& v : as) v *= sa;
    for (double& v : bs) v *= sb;
    EXPECT_LE(RelativeError(
                  UnitNormGaussianEval(InputVector(as), InputVector(bs), 1.0),
                  sa * sb * UnitNormGaussianEval(a, b, 1.0)),
              1e-12);
  }
}

TEST(KernelPropertyTest, Ranges) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 500; ++trial) {
    const int dim = 1 + trial % 10;
    const InputVector a = RandomVector(rng, dim, -1, 1);
    const InputVector b = RandomVector(rng, dim, -1, 1);
    const double g = GaussianEval(a, b, 2.0);
    EXPECT_GT(g, 0.0);
    EXPECT_LE(g, 1.0);
    const double u = UnitNormGaussianEval(a, b, 0.5);
    EXPECT_GE(u, 0.0);
    EXPECT_LE(u, a.norm() * b.norm());
  }
}

TEST(KernelPropertyTest, GramMatricesArePositiveSemidefinite) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 1 + trial % 10;
    const int count = 1 + trial % 10;
    std::vector<InputVector> points;
    for (int i = 0; i < count; ++i) points.push_back(RandomVector(rng, dim));
    for (const KernelSpec& spec : {KernelSpec::Gaussian(1.0, dim),
                                   KernelSpec::UnitNormGaussian(1.0, dim)}) {
      const Eigen::MatrixXd g = GramMatrix(points, spec);
      const auto eig =
          Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(g).eigenvalues();
      EXPECT_GE(eig.minCoeff(), -1e-9 * eig.maxCoeff());
    }
  }
}

}  // namespace
}  // namespace kaf

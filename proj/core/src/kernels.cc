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
#include <string>
#include <utility>

#include "kaf/errors.h"

namespace kaf {
namespace {

double EuclideanNorm(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

void CheckSameDim(const InputVector& a, const InputVector& b) {
  if (a.dim() != b.dim()) {
    throw ContractError("kernel arguments differ in dimension: " +
                        std::to_string(a.dim()) + " vs " +
                        std::to_string(b.dim()));
  }
}

void CheckLengthscale(double lengthscale) {
  if (!(lengthscale > 0.0) || !std::isfinite(lengthscale)) {
    throw ConfigError("kernel lengthscale must be positive and finite, got " +
                      std::to_string(lengthscale));
  }
}

// Assumes both inputs are nonzero.
double DirectionSquaredDistance(const InputVector& a, const InputVector& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double diff = a[i] / a.norm() - b[i] / b.norm();
    sum += diff * diff;
  }
  return sum;
}

}  // namespace

InputVector::InputVector(std::vector<double> values)
    : values_(std::move(values)), norm_(EuclideanNorm(values_)) {}

InputVector::InputVector(std::initializer_list<double> values)
    : InputVector(std::vector<double>(values)) {}

NormalizedInput Normalize(const InputVector& x) {
  if (x.is_zero()) {
    return {InputVector(std::vector<double>(x.dim(), 0.0)), true};
  }
  std::vector<double> unit(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) unit[i] = x[i] / x.norm();
  return {InputVector(std::move(unit)), false};
}

double SquaredDistance(const InputVector& a, const InputVector& b) {
  CheckSameDim(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return sum;
}

double GaussianEval(const InputVector& a, const InputVector& b,
                    double lengthscale) {
  CheckLengthscale(lengthscale);
  return std::exp(-SquaredDistance(a, b) / (2.0 * lengthscale * lengthscale));
}

double UnitNormGaussianEval(const InputVector& a, const InputVector& b,
                            double lengthscale) {
  CheckSameDim(a, b);
  CheckLengthscale(lengthscale);
  if (a.is_zero() || b.is_zero()) return 0.0;
  const double similarity = std::exp(-DirectionSquaredDistance(a, b) /
                                     (2.0 * lengthscale * lengthscale));
  // Multiply the two norms first so the result is exactly symmetric.
  return similarity * (a.norm() * b.norm());
}

double LengthscaleFromDim(double per_coordinate, int dim) {
  if (!(per_coordinate > 0.0) || !std::isfinite(per_coordinate)) {
    throw ConfigError("l0 must be positive and finite, got " +
                      std::to_string(per_coordinate));
  }
  if (dim < 1) {
    throw ConfigError("input dimension must be >= 1, got " +
                      std::to_string(dim));
  }
  return per_coordinate * std::sqrt(static_cast<double>(dim));
}

std::string_view KernelKindName(KernelKind kind) {
  switch (kind) {
    case KernelKind::kGaussian:
      return "gaussian";
    case KernelKind::kUnitNormGaussian:
      return "unitnorm";
  }
  return "unknown";
}

KernelSpec KernelSpec::Gaussian(double lengthscale, int dim) {
  return WithLengthscale(KernelKind::kGaussian, lengthscale, dim);
}

KernelSpec KernelSpec::UnitNormGaussian(double per_coordinate, int dim) {
  const double lengthscale = LengthscaleFromDim(per_coordinate, dim);
  return KernelSpec(KernelKind::kUnitNormGaussian, dim, lengthscale,
                    per_coordinate, true);
}

KernelSpec KernelSpec::WithLengthscale(KernelKind kind, double lengthscale,
                                       int dim) {
  CheckLengthscale(lengthscale);
  if (dim < 1) {
    throw ConfigError("input dimension must be >= 1, got " +
                      std::to_string(dim));
  }
  return KernelSpec(kind, dim, lengthscale,
                    lengthscale / std::sqrt(static_cast<double>(dim)), false);
}

double KernelSpec::Evaluate(const InputVector& a, const InputVector& b) const {
  if (kind_ == KernelKind::kGaussian) return GaussianEval(a, b, lengthscale_);
  return UnitNormGaussianEval(a, b, lengthscale_);
}

Eigen::MatrixXd GramMatrix(std::span<const InputVector> points,
                           const KernelSpec& spec) {
  if (points.empty()) throw ContractError("Gram matrix of an empty point set");
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (points[i].dim() != static_cast<std::size_t>(spec.dim())) {
      throw ContractError("Gram matrix point " + std::to_string(i) +
                          " has dimension " + std::to_string(points[i].dim()) +
                          ", kernel expects " + std::to_string(spec.dim()));
    }
    for (Eigen::Index j = 0; j <= i; ++j) {
      gram(i, j) = spec.Evaluate(points[i], points[j]);
      gram(j, i) = gram(i, j);
    }
  }
  return gram;
}

}  // namespace kaf

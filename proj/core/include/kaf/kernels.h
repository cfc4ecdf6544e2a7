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

#ifndef KAF_KERNELS_H_
#define KAF_KERNELS_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace kaf {

// Inputs with a Euclidean norm below this are treated as the zero vector.
inline constexpr double kZeroNormThreshold = 1e-12;

// A regressor vector together with its Euclidean norm, computed once on
// construction. Immutable.
class InputVector {
 public:
  InputVector() = default;
  explicit InputVector(std::vector<double> values);
  InputVector(std::initializer_list<double> values);

  std::span<const double> values() const { return values_; }
  std::size_t dim() const { return values_.size(); }
  double norm() const { return norm_; }
  bool is_zero() const { return norm_ < kZeroNormThreshold; }
  double operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const InputVector& a, const InputVector& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<double> values_;
  double norm_ = 0.0;
};

struct NormalizedInput {
  InputVector direction;  // unit norm, or the zero vector when degenerate
  bool degenerate = false;
};

// x / ||x||. Zero-norm inputs map to the zero vector with `degenerate` set.
NormalizedInput Normalize(const InputVector& x);

double SquaredDistance(const InputVector& a, const InputVector& b);

// exp(-||a - b||^2 / (2 l^2)).
double GaussianEval(const InputVector& a, const InputVector& b,
                    double lengthscale);

// ||a|| * exp(-||a/||a|| - b/||b|| ||^2 / (2 l^2)) * ||b||, and 0 when either
// argument is the zero vector.
double UnitNormGaussianEval(const InputVector& a, const InputVector& b,
                            double lengthscale);

// l = l0 * sqrt(d). Throws ConfigError for l0 <= 0 or d < 1.
double LengthscaleFromDim(double per_coordinate, int dim);

enum class KernelKind { kGaussian, kUnitNormGaussian };

std::string_view KernelKindName(KernelKind kind);

// Kernel choice plus its lengthscale parameters. `per_coordinate()` is l0;
// for kernels built from an explicit lengthscale it is reported as l / sqrt(d).
class KernelSpec {
 public:
  // Unit-norm Gaussian, d = 1, l0 = 1.
  KernelSpec() : KernelSpec(KernelKind::kUnitNormGaussian, 1, 1.0, 1.0, true) {}

  static KernelSpec Gaussian(double lengthscale, int dim);
  // Unit-norm Gaussian kernel with l = l0 * sqrt(d).
  static KernelSpec UnitNormGaussian(double per_coordinate, int dim);
  static KernelSpec WithLengthscale(KernelKind kind, double lengthscale,
                                    int dim);

  KernelKind kind() const { return kind_; }
  int dim() const { return dim_; }
  double lengthscale() const { return lengthscale_; }
  double per_coordinate() const { return per_coordinate_; }
  bool lengthscale_from_heuristic() const { return from_heuristic_; }

  double Evaluate(const InputVector& a, const InputVector& b) const;

 private:
  KernelSpec(KernelKind kind, int dim, double lengthscale,
             double per_coordinate, bool from_heuristic)
      : kind_(kind),
        dim_(dim),
        lengthscale_(lengthscale),
        per_coordinate_(per_coordinate),
        from_heuristic_(from_heuristic) {}

  KernelKind kind_;
  int dim_;
  double lengthscale_;
  double per_coordinate_;
  bool from_heuristic_;
};

// G(i, j) = spec.Evaluate(points[i], points[j]). Every point must have
// dimension spec.dim().
Eigen::MatrixXd GramMatrix(std::span<const InputVector> points,
                           const KernelSpec& spec);

}  // namespace kaf

#endif  // KAF_KERNELS_H_

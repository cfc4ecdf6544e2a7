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

#ifndef KAF_FILTER_H_
#define KAF_FILTER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kaf/dictionary.h"
#include "kaf/kernels.h"

namespace kaf {

struct FilterConfig {
  KernelSpec kernel;
  NoveltyConfig novelty;
  double mu = 0.5;        // learning rate, must lie in (0, 1)
  double epsilon = 1e-4;  // step-size regularizer, must be > 0
  // false: plain KLMS with fixed step mu. Gaussian kernel only.
  bool normalized_step = true;
  // Gaussian kernel only: the prediction threshold is
  // novelty.delta_pred * (std of the targets seen so far).
  bool scale_delta_pred_by_std = false;
  std::optional<std::size_t> max_dictionary_size;

  // Throws ConfigError naming the violated bound.
  void Validate() const;
};

struct StepOutcome {
  std::size_t index = 0;  // 0-based step index
  double target = 0.0;
  double prediction = 0.0;
  double error = 0.0;  // target - prediction
  bool centre_added = false;
  std::size_t dict_size = 0;  // after this step
  bool degenerate_input = false;
  // The dictionary was empty when predicting, so the prediction is the
  // trivial 0 rather than a model output.
  bool cold_start = false;

  // Whether this step carries a real model prediction (used for scoring).
  bool scored() const { return !degenerate_input && !cold_start; }
};

// mu / (epsilon + regressor_energy), where regressor_energy = sum_j g_j^2.
double NormalizedStepSize(double mu, double epsilon, double regressor_energy);

// Online kernel least-mean-squares filter with novelty sparsification.
//
// With the Gaussian kernel the dictionary holds raw inputs and
//   y_hat = sum_j a_j K_G(x, s_j).
// With the unit-norm Gaussian kernel the dictionary holds unit-norm inputs
// and
//   y_hat = sum_j a_j ||x|| K_G(x/||x||, s_j).
// In both cases g_j denotes the j-th regressor component (the factor that
// multiplies a_j above). Weights follow the normalized LMS rule
//   a_j += mu / (epsilon + sum_k g_k^2) * e * g_j.
//
// Each Step either admits the input as a new centre (only the new weight is
// set, to the same rule applied from zero) or updates every existing weight.
// Not thread-safe; independent filters may run on different threads.
class KlmsFilter {
 public:
  explicit KlmsFilter(FilterConfig config);

  const FilterConfig& config() const { return config_; }
  const Dictionary& dictionary() const { return dictionary_; }
  std::span<const double> weights() const { return weights_; }
  std::size_t step_count() const { return step_count_; }

  double Predict(const InputVector& x) const;

  // Step size used by UpdateWeights for input x. Requires a nonempty
  // dictionary. Returns mu in plain LMS mode.
  double StepSize(const InputVector& x) const;

  // Applies one LMS correction with error e to every current weight.
  void UpdateWeights(const InputVector& x, double error);

  // Predict, apply the novelty criterion, then adapt. Throws NumericFault
  // if a nonfinite value shows up and CapacityError if the dictionary limit
  // is hit; the filter is left unchanged in both cases.
  StepOutcome Step(const InputVector& x, double target);

  // Inserts a centre with a given weight (warm start). x is normalized in
  // unit-norm mode. Returns false for zero-norm inputs or duplicates.
  bool SeedCentre(const InputVector& x, double weight);

 private:
  struct Regressor {
    InputVector key;                  // x, or x/||x|| in unit-norm mode
    double gain = 1.0;                // ||x|| in unit-norm mode, else 1
    std::vector<double> similarity;   // K_G(key, s_j)
    std::vector<double> components;   // g_j = gain * similarity_j
    double energy = 0.0;              // sum_j g_j^2
  };

  bool unit_norm() const {
    return config_.kernel.kind() == KernelKind::kUnitNormGaussian;
  }
  void CheckInput(const InputVector& x) const;
  Regressor BuildRegressor(const InputVector& x) const;
  double StepSizeFor(double energy) const;
  double PredictionThreshold() const;

  FilterConfig config_;
  Dictionary dictionary_;
  std::vector<double> weights_;
  std::size_t step_count_ = 0;

  // Running target statistics for the threshold guards.
  std::size_t targets_seen_ = 0;
  double target_mean_ = 0.0;
  double target_m2_ = 0.0;
  double max_abs_target_ = 0.0;
};

}  // namespace kaf

#endif  // KAF_FILTER_H_

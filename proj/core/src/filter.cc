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

#include "kaf/filter.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "kaf/errors.h"

namespace kaf {
namespace {

// Relative-error denominator floor: |y| below this counts as zero.
double ZeroTargetGuard(double max_abs_target) {
  return std::max(1e-8 * max_abs_target, 1e-12);
}

bool AllFinite(std::span<const double> values) {
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return std::isfinite(v); });
}

}  // namespace

void FilterConfig::Validate() const {
  if (!(mu > 0.0 && mu < 1.0)) {
    throw ConfigError("mu must lie in (0, 1), got " + std::to_string(mu));
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ConfigError("epsilon must be positive and finite, got " +
                      std::to_string(epsilon));
  }
  const DictionaryMode mode = ModeForKernel(kernel.kind());
  novelty.Validate(mode);
  if (mode == DictionaryMode::kUnitNorm && !normalized_step) {
    throw ConfigError("plain (unnormalized) LMS is only available for the "
                      "Gaussian kernel");
  }
  if (mode == DictionaryMode::kUnitNorm && scale_delta_pred_by_std) {
    throw ConfigError("std-scaled delta_pred is only available for the "
                      "Gaussian kernel; unit-norm delta_pred is relative");
  }
  if (max_dictionary_size && *max_dictionary_size == 0) {
    throw ConfigError("max dictionary size must be at least 1");
  }
}

double NormalizedStepSize(double mu, double epsilon, double regressor_energy) {
  return mu / (epsilon + regressor_energy);
}

KlmsFilter::KlmsFilter(FilterConfig config)
    : config_((config.Validate(), std::move(config))),
      dictionary_(ModeForKernel(config_.kernel.kind()),
                  config_.max_dictionary_size) {}

void KlmsFilter::CheckInput(const InputVector& x) const {
  if (x.dim() != static_cast<std::size_t>(config_.kernel.dim())) {
    throw ContractError("input has dimension " + std::to_string(x.dim()) +
                        ", filter order is " +
                        std::to_string(config_.kernel.dim()));
  }
}

KlmsFilter::Regressor KlmsFilter::BuildRegressor(const InputVector& x) const {
  Regressor r;
  if (unit_norm()) {
    r.key = Normalize(x).direction;
    r.gain = x.norm();
  } else {
    r.key = x;
  }
  const double l = config_.kernel.lengthscale();
  r.similarity.reserve(dictionary_.size());
  r.components.reserve(dictionary_.size());
  for (const Centre& c : dictionary_.centres()) {
    const double k = GaussianEval(r.key, c.vector, l);
    const double g = r.gain * k;
    r.similarity.push_back(k);
    r.components.push_back(g);
    r.energy += g * g;
  }
  return r;
}

double KlmsFilter::StepSizeFor(double energy) const {
  if (!config_.normalized_step) return config_.mu;
  return NormalizedStepSize(config_.mu, config_.epsilon, energy);
}

double KlmsFilter::Predict(const InputVector& x) const {
  CheckInput(x);
  if (dictionary_.empty() || (unit_norm() && x.is_zero())) return 0.0;
  const Regressor r = BuildRegressor(x);
  double prediction = 0.0;
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    prediction += weights_[j] * r.components[j];
  }
  return prediction;
}

double KlmsFilter::StepSize(const InputVector& x) const {
  CheckInput(x);
  if (dictionary_.empty()) {
    throw ContractError("step size is undefined for an empty dictionary");
  }
  if (unit_norm() && x.is_zero()) return StepSizeFor(0.0);
  return StepSizeFor(BuildRegressor(x).energy);
}

void KlmsFilter::UpdateWeights(const InputVector& x, double error) {
  CheckInput(x);
  if (dictionary_.empty()) {
    throw ContractError("cannot update weights of an empty dictionary");
  }
  if (!std::isfinite(error)) {
    throw NumericFault("nonfinite prediction error", step_count_);
  }
  if (unit_norm() && x.is_zero()) return;
  const Regressor r = BuildRegressor(x);
  const double step = StepSizeFor(r.energy) * error;
  std::vector<double> updated = weights_;
  for (std::size_t j = 0; j < updated.size(); ++j) {
    updated[j] += step * r.components[j];
  }
  if (!AllFinite(updated)) {
    throw NumericFault("weight update produced a nonfinite weight",
                       step_count_);
  }
  weights_ = std::move(updated);
}

double KlmsFilter::PredictionThreshold() const {
  if (!config_.scale_delta_pred_by_std) return config_.novelty.delta_pred;
  if (targets_seen_ == 0) return 0.0;
  const double variance = target_m2_ / static_cast<double>(targets_seen_);
  return config_.novelty.delta_pred * std::sqrt(variance);
}

StepOutcome KlmsFilter::Step(const InputVector& x, double target) {
  CheckInput(x);
  const std::size_t index = step_count_;
  if (!std::isfinite(target)) throw NumericFault("nonfinite target", index);
  if (!AllFinite(x.values())) throw NumericFault("nonfinite input", index);

  // Running statistics include the current target; they are committed only
  // once the step has succeeded.
  const std::size_t seen_before = targets_seen_;
  const double mean_before = target_mean_;
  const double m2_before = target_m2_;
  const double max_before = max_abs_target_;
  ++targets_seen_;
  const double delta = target - target_mean_;
  target_mean_ += delta / static_cast<double>(targets_seen_);
  target_m2_ += delta * (target - target_mean_);
  max_abs_target_ = std::max(max_abs_target_, std::abs(target));
  auto rollback = [&] {
    targets_seen_ = seen_before;
    target_mean_ = mean_before;
    target_m2_ = m2_before;
    max_abs_target_ = max_before;
  };

  StepOutcome out;
  out.index = index;
  out.target = target;

  if (unit_norm() && x.is_zero()) {
    out.degenerate_input = true;
    out.error = target;
    out.dict_size = dictionary_.size();
    ++step_count_;
    return out;
  }

  try {
    const Regressor r = BuildRegressor(x);
    double prediction = 0.0;
    for (std::size_t j = 0; j < weights_.size(); ++j) {
      prediction += weights_[j] * r.components[j];
    }
    if (!std::isfinite(prediction)) {
      throw NumericFault("nonfinite prediction", index);
    }
    const double error = target - prediction;
    out.prediction = prediction;
    out.error = error;
    out.cold_start = dictionary_.empty();

    bool admit = out.cold_start;
    if (!admit) {
      const DictionaryMode mode = dictionary_.mode();
      double novelty_stat = 0.0;
      double error_stat = 0.0;
      NoveltyConfig thresholds = config_.novelty;
      if (mode == DictionaryMode::kUnitNorm) {
        // Equals dictionary_.KernelSimilarity(r.key, l).
        novelty_stat =
            *std::max_element(r.similarity.begin(), r.similarity.end());
        error_stat = std::abs(target) < ZeroTargetGuard(max_abs_target_)
                         ? std::numeric_limits<double>::infinity()
                         : std::abs(error) / std::abs(target);
      } else {
        novelty_stat = dictionary_.EuclideanDistance(x);
        error_stat = std::abs(error);
        thresholds.delta_pred = PredictionThreshold();
      }
      admit = NoveltyDecision(novelty_stat, error_stat, thresholds, mode);
    }

    if (admit) {
      // The new centre matches the input exactly, so its own kernel value is
      // 1 and its regressor component is the gain.
      const double step = StepSizeFor(r.energy + r.gain * r.gain);
      const double weight = step * error * r.gain;
      if (!std::isfinite(weight)) {
        throw NumericFault("new centre weight is nonfinite", index);
      }
      if (dictionary_.Add(r.key, index, x.norm())) {
        weights_.push_back(weight);
        out.centre_added = true;
      }
    } else {
      const double step = StepSizeFor(r.energy) * error;
      std::vector<double> updated = weights_;
      for (std::size_t j = 0; j < updated.size(); ++j) {
        updated[j] += step * r.components[j];
      }
      if (!AllFinite(updated)) {
        throw NumericFault("weight update produced a nonfinite weight", index);
      }
      weights_ = std::move(updated);
    }
  } catch (...) {
    rollback();
    throw;
  }

  assert(weights_.size() == dictionary_.size());
  out.dict_size = dictionary_.size();
  ++step_count_;
  return out;
}

bool KlmsFilter::SeedCentre(const InputVector& x, double weight) {
  CheckInput(x);
  if (!std::isfinite(weight)) {
    throw NumericFault("seed weight is nonfinite", step_count_);
  }
  InputVector key = x;
  if (unit_norm()) {
    if (x.is_zero()) return false;
    key = Normalize(x).direction;
  }
  if (!dictionary_.Add(std::move(key), step_count_, x.norm())) return false;
  weights_.push_back(weight);
  return true;
}

}  // namespace kaf

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

#include "kaf/dictionary.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "kaf/errors.h"

namespace kaf {

std::string_view DictionaryModeName(DictionaryMode mode) {
  return mode == DictionaryMode::kRaw ? "raw" : "unitnorm";
}

DictionaryMode ModeForKernel(KernelKind kind) {
  return kind == KernelKind::kGaussian ? DictionaryMode::kRaw
                                       : DictionaryMode::kUnitNorm;
}

void NoveltyConfig::Validate(DictionaryMode mode) const {
  if (!std::isfinite(delta_pred) || delta_pred < 0.0) {
    throw ConfigError("delta_pred must be a finite value >= 0, got " +
                      std::to_string(delta_pred));
  }
  if (mode == DictionaryMode::kUnitNorm) {
    if (!(delta_dict >= 0.0 && delta_dict < 1.0)) {
      throw ConfigError(
          "delta_dict must lie in [0, 1) for the unit-norm kernel, got " +
          std::to_string(delta_dict));
    }
  } else if (!(delta_dict > 0.0) || !std::isfinite(delta_dict)) {
    throw ConfigError(
        "delta_dict must be a positive distance for the Gaussian kernel, "
        "got " + std::to_string(delta_dict));
  }
}

bool NoveltyDecision(double novelty_stat, double error_stat,
                     const NoveltyConfig& config, DictionaryMode mode) {
  const bool poorly_predicted = error_stat > config.delta_pred;
  if (mode == DictionaryMode::kUnitNorm) {
    return novelty_stat < config.delta_dict && poorly_predicted;
  }
  return novelty_stat > config.delta_dict && poorly_predicted;
}

Dictionary::Dictionary(DictionaryMode mode, std::optional<std::size_t> max_size)
    : mode_(mode), max_size_(max_size) {
  if (max_size_ && *max_size_ == 0) {
    throw ConfigError("dictionary size limit must be at least 1");
  }
}

void Dictionary::RequireMode(DictionaryMode expected,
                             std::string_view op) const {
  if (mode_ != expected) {
    throw ContractError(std::string(op) + " requires a " +
                        std::string(DictionaryModeName(expected)) +
                        " dictionary, this one is " +
                        std::string(DictionaryModeName(mode_)));
  }
}

std::optional<std::size_t> Dictionary::Add(InputVector vector,
                                           std::size_t added_at,
                                           double original_norm) {
  if (!centres_.empty() && vector.dim() != centres_.front().vector.dim()) {
    throw ContractError("centre dimension " + std::to_string(vector.dim()) +
                        " does not match dictionary dimension " +
                        std::to_string(centres_.front().vector.dim()));
  }
  if (mode_ == DictionaryMode::kUnitNorm &&
      std::abs(vector.norm() - 1.0) > 1e-12) {
    throw ContractError("unit-norm dictionary received a vector of norm " +
                        std::to_string(vector.norm()));
  }
  const bool duplicate =
      std::any_of(centres_.begin(), centres_.end(),
                  [&](const Centre& c) { return c.vector == vector; });
  if (duplicate) return std::nullopt;
  if (max_size_ && centres_.size() >= *max_size_) {
    throw CapacityError("dictionary reached its size limit of " +
                        std::to_string(*max_size_) + " centres at step " +
                        std::to_string(added_at));
  }
  centres_.push_back(Centre{std::move(vector), added_at, original_norm});
  return centres_.size() - 1;
}

double Dictionary::KernelSimilarity(const InputVector& direction,
                                    double lengthscale) const {
  RequireMode(DictionaryMode::kUnitNorm, "kernel similarity");
  double best = 0.0;
  for (const Centre& c : centres_) {
    best = std::max(best, GaussianEval(direction, c.vector, lengthscale));
  }
  return best;
}

double Dictionary::EuclideanDistance(const InputVector& x) const {
  RequireMode(DictionaryMode::kRaw, "euclidean distance");
  double best = std::numeric_limits<double>::infinity();
  for (const Centre& c : centres_) {
    best = std::min(best, std::sqrt(SquaredDistance(x, c.vector)));
  }
  return best;
}

}  // namespace kaf

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

#ifndef KAF_DICTIONARY_H_
#define KAF_DICTIONARY_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "kaf/kernels.h"

namespace kaf {

// Raw dictionaries store inputs as observed (Gaussian KLMS). UnitNorm
// dictionaries store only the direction of each input.
enum class DictionaryMode { kRaw, kUnitNorm };

std::string_view DictionaryModeName(DictionaryMode mode);
DictionaryMode ModeForKernel(KernelKind kind);

struct Centre {
  InputVector vector;
  std::size_t added_at = 0;     // step index
  double original_norm = 0.0;   // norm of the raw input that produced it
};

// Thresholds of the novelty criterion. Their meaning depends on the mode:
//
//   UnitNorm: delta_dict is a Gaussian-kernel similarity in [0, 1); a sample
//             is novel when its best similarity is *below* it. delta_pred is
//             a relative error |e| / |y|.
//   Raw:      delta_dict is a Euclidean distance; a sample is novel when its
//             nearest centre is *farther* than it. delta_pred is an absolute
//             error (the filter may rescale it by the running target std).
struct NoveltyConfig {
  double delta_dict = 0.95;
  double delta_pred = 0.05;

  // Throws ConfigError when the thresholds are invalid for `mode`.
  void Validate(DictionaryMode mode) const;
};

// Both conditions must hold: far from the dictionary and poorly predicted.
bool NoveltyDecision(double novelty_stat, double error_stat,
                     const NoveltyConfig& config, DictionaryMode mode);

// Append-only set of centres. Centres are never removed; an optional size
// limit makes Add throw CapacityError instead of growing past it.
class Dictionary {
 public:
  explicit Dictionary(DictionaryMode mode,
                      std::optional<std::size_t> max_size = std::nullopt);

  DictionaryMode mode() const { return mode_; }
  std::optional<std::size_t> max_size() const { return max_size_; }
  std::size_t size() const { return centres_.size(); }
  bool empty() const { return centres_.empty(); }
  std::span<const Centre> centres() const { return centres_; }
  const Centre& operator[](std::size_t i) const { return centres_[i]; }

  // Appends `vector` and returns its index, or std::nullopt if an identical
  // vector is already present. In UnitNorm mode `vector` must already be
  // unit norm.
  std::optional<std::size_t> Add(InputVector vector, std::size_t added_at,
                                 double original_norm);

  // max_j K_G(direction, s_j); 0 for an empty dictionary. UnitNorm only.
  double KernelSimilarity(const InputVector& direction,
                          double lengthscale) const;

  // min_j ||x - s_j||; +infinity for an empty dictionary. Raw only.
  double EuclideanDistance(const InputVector& x) const;

 private:
  void RequireMode(DictionaryMode expected, std::string_view op) const;

  DictionaryMode mode_;
  std::optional<std::size_t> max_size_;
  std::vector<Centre> centres_;
};

}  // namespace kaf

#endif  // KAF_DICTIONARY_H_

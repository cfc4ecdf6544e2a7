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

#ifndef KAF_METRICS_H_
#define KAF_METRICS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kaf/dictionary.h"
#include "kaf/filter.h"

namespace kaf {

// kVariance: sum (y - y_hat)^2 / sum (y - mean y)^2  (predicting the mean
//            scores exactly 1).
// kPower:    sum (y - y_hat)^2 / sum y^2.
enum class NmseVariant { kVariance, kPower };

std::string_view NmseVariantName(NmseVariant variant);
std::optional<NmseVariant> ParseNmseVariant(std::string_view name);

// Throws UndefinedMetricError when the denominator is zero, and
// ContractError for empty or mismatched inputs.
double Nmse(std::span<const double> targets,
            std::span<const double> predictions,
            NmseVariant variant = NmseVariant::kVariance);

// Everything a finished run produced.
struct RunTrace {
  std::string series_name;
  FilterConfig config;
  std::vector<StepOutcome> outcomes;
  std::vector<Centre> centres;   // final dictionary
  std::vector<double> weights;   // final weights, one per centre
};

struct GrowthPoint {
  std::size_t step = 0;
  std::size_t dict_size = 0;
  friend bool operator==(const GrowthPoint&, const GrowthPoint&) = default;
};

// Dictionary size after every step. Throws ContractError for an empty trace.
std::vector<GrowthPoint> GrowthCurve(const RunTrace& trace);

struct RunReport {
  NmseVariant nmse_variant = NmseVariant::kVariance;
  double nmse = 0.0;  // over scored steps (see StepOutcome::scored)
  // Same metric over the first and last quarter of the scored steps; empty
  // when a window has fewer than two steps or zero denominator.
  std::optional<double> nmse_first_quarter;
  std::optional<double> nmse_last_quarter;
  std::size_t scored_steps = 0;
  std::size_t final_dict_size = 0;
  double max_abs_weight = 0.0;
  std::vector<GrowthPoint> growth_curve;
  RunTrace trace;
};

RunReport Summarize(RunTrace trace,
                    NmseVariant variant = NmseVariant::kVariance);

// Number of centres added at or after `from_step`.
std::size_t AdditionsFrom(const RunTrace& trace, std::size_t from_step);

}  // namespace kaf

#endif  // KAF_METRICS_H_

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

#include "kaf/metrics.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "kaf/errors.h"

namespace kaf {

std::string_view NmseVariantName(NmseVariant variant) {
  return variant == NmseVariant::kVariance ? "variance" : "power";
}

std::optional<NmseVariant> ParseNmseVariant(std::string_view name) {
  if (name == "variance") return NmseVariant::kVariance;
  if (name == "power") return NmseVariant::kPower;
  return std::nullopt;
}

double Nmse(std::span<const double> targets,
            std::span<const double> predictions, NmseVariant variant) {
  if (targets.size() != predictions.size()) {
    throw ContractError("NMSE needs as many predictions as targets");
  }
  if (targets.empty()) throw ContractError("NMSE of an empty sequence");

  double mean = 0.0;
  if (variant == NmseVariant::kVariance) {
    for (double y : targets) mean += y;
    mean /= static_cast<double>(targets.size());
  }
  double residual = 0.0;
  double reference = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const double e = targets[i] - predictions[i];
    const double c = targets[i] - mean;
    residual += e * e;
    reference += c * c;
  }
  if (!(reference > 0.0)) {
    throw UndefinedMetricError(
        variant == NmseVariant::kVariance
            ? "NMSE is undefined: targets have zero variance"
            : "NMSE is undefined: targets have zero power");
  }
  return residual / reference;
}

std::vector<GrowthPoint> GrowthCurve(const RunTrace& trace) {
  if (trace.outcomes.empty()) {
    throw ContractError("growth curve of an empty trace");
  }
  std::vector<GrowthPoint> curve;
  curve.reserve(trace.outcomes.size());
  for (const StepOutcome& o : trace.outcomes) {
    curve.push_back({o.index, o.dict_size});
  }
  return curve;
}

std::size_t AdditionsFrom(const RunTrace& trace, std::size_t from_step) {
  return static_cast<std::size_t>(std::count_if(
      trace.outcomes.begin(), trace.outcomes.end(),
      [&](const StepOutcome& o) {
        return o.centre_added && o.index >= from_step;
      }));
}

namespace {

std::optional<double> WindowNmse(std::span<const double> targets,
                                 std::span<const double> predictions,
                                 NmseVariant variant) {
  if (targets.size() < 2) return std::nullopt;
  try {
    return Nmse(targets, predictions, variant);
  } catch (const UndefinedMetricError&) {
    return std::nullopt;
  }
}

}  // namespace

RunReport Summarize(RunTrace trace, NmseVariant variant) {
  RunReport report;
  report.nmse_variant = variant;
  report.growth_curve = GrowthCurve(trace);
  report.final_dict_size = trace.outcomes.back().dict_size;

  std::vector<double> targets;
  std::vector<double> predictions;
  for (const StepOutcome& o : trace.outcomes) {
    if (!o.scored()) continue;
    targets.push_back(o.target);
    predictions.push_back(o.prediction);
  }
  report.scored_steps = targets.size();
  if (targets.empty()) {
    throw UndefinedMetricError("NMSE is undefined: no step has a prediction");
  }
  report.nmse = Nmse(targets, predictions, variant);

  const std::size_t quarter = targets.size() / 4;
  const std::span<const double> t(targets);
  const std::span<const double> p(predictions);
  report.nmse_first_quarter =
      WindowNmse(t.first(quarter), p.first(quarter), variant);
  report.nmse_last_quarter =
      WindowNmse(t.last(quarter), p.last(quarter), variant);

  for (double w : trace.weights) {
    report.max_abs_weight = std::max(report.max_abs_weight, std::abs(w));
  }
  report.trace = std::move(trace);
  return report;
}

}  // namespace kaf

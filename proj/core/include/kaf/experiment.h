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

#ifndef KAF_EXPERIMENT_H_
#define KAF_EXPERIMENT_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kaf/filter.h"
#include "kaf/metrics.h"
#include "kaf/settings.h"
#include "kaf/timeseries.h"

namespace kaf {

// A FilterConfig plus a record of where each derived value came from.
struct ResolvedFilter {
  FilterConfig filter;
  std::string lengthscale_source;  // "l0*sqrt(d)", "median-heuristic", "override"
  std::string delta_dict_source;   // "fixed", "factor*median", "override"
  std::optional<double> median_pairwise_distance;
};

// Median Euclidean distance over all pairs among the first `window` inputs.
// Throws ConfigError if fewer than two inputs are available.
double MedianPairwiseDistance(std::span<const EmbeddedSample> samples,
                              std::size_t window);

// Loads the configured source (file or synthetic), forward-fills missing
// values and applies `truncate`.
TimeSeries LoadSeries(const ExperimentConfig& config);

ResolvedFilter ResolveFilter(const ExperimentConfig& config, KernelKind mode,
                             std::span<const EmbeddedSample> samples);

// Runs a fresh filter over `samples`, one Step per sample.
RunTrace RunFilter(const FilterConfig& config,
                   std::span<const EmbeddedSample> samples,
                   std::string series_name);

struct ExperimentResult {
  ExperimentConfig config;
  KernelKind mode = KernelKind::kUnitNormGaussian;
  std::string series_name;
  std::size_t series_length = 0;
  ResolvedFilter resolved;
  RunReport report;
};

// Runs `mode` on already-embedded samples; writes nothing.
ExperimentResult RunOnSamples(const ExperimentConfig& config, KernelKind mode,
                              std::span<const EmbeddedSample> samples,
                              const TimeSeries& series);

// Full pipeline for config.mode. Deterministic. Writes the report files
// when config.out_dir is set.
ExperimentResult RunExperiment(const ExperimentConfig& config);

struct ComparisonReport {
  ExperimentResult baseline;
  ExperimentResult unit_norm;
  double nmse_delta = 0.0;       // unit-norm NMSE minus baseline NMSE
  double dict_size_ratio = 0.0;  // unit-norm size / baseline size
};

// Runs both configs (concurrently) on one shared sample stream. Both must
// name the same data source, truncation and order; the stream is loaded
// from `baseline`. Each config's `mode` selects its filter, so passing the
// same config twice yields two identical runs.
ComparisonReport RunComparison(const ExperimentConfig& baseline,
                               const ExperimentConfig& unit_norm);

// Gaussian baseline vs unit-norm KLMS on `config`'s data.
ComparisonReport RunComparison(const ExperimentConfig& config);

}  // namespace kaf

#endif  // KAF_EXPERIMENT_H_

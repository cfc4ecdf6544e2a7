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

#include "kaf/experiment.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <utility>

#include "kaf/errors.h"
#include "kaf/report.h"

namespace kaf {
namespace {

// Below this the median distance cannot serve as a lengthscale.
constexpr double kMinMedianDistance = 1e-12;

std::string SourceLabel(const ExperimentConfig& c) {
  if (c.file) return c.file->path;
  return c.synthetic->kind == SyntheticKind::kSine ? "sine" : "ramp";
}

bool SameSource(const ExperimentConfig& a, const ExperimentConfig& b) {
  if (a.file.has_value() != b.file.has_value()) return false;
  if (a.file) {
    return a.file->path == b.file->path && a.file->column == b.file->column;
  }
  const SyntheticSource& x = *a.synthetic;
  const SyntheticSource& y = *b.synthetic;
  return x.kind == y.kind && x.n == y.n && x.amplitude == y.amplitude &&
         x.period == y.period && x.phase == y.phase && x.slope == y.slope &&
         x.intercept == y.intercept;
}

}  // namespace

double MedianPairwiseDistance(std::span<const EmbeddedSample> samples,
                              std::size_t window) {
  const std::size_t n = std::min(window, samples.size());
  if (n < 2) {
    throw ConfigError("median pairwise distance needs at least two inputs");
  }
  std::vector<double> distances;
  distances.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      distances.push_back(
          std::sqrt(SquaredDistance(samples[i].input, samples[j].input)));
    }
  }
  std::sort(distances.begin(), distances.end());
  const std::size_t mid = distances.size() / 2;
  if (distances.size() % 2 == 1) return distances[mid];
  return 0.5 * (distances[mid - 1] + distances[mid]);
}

TimeSeries LoadSeries(const ExperimentConfig& config) {
  config.Validate();
  TimeSeries series;
  if (config.file) {
    std::ifstream in(config.file->path);
    if (!in) {
      throw IngestionError("cannot open data file '" + config.file->path +
                           "'");
    }
    const std::string name =
        std::filesystem::path(config.file->path).stem().string();
    series = config.file->column.empty()
                 ? LoadCsvLastColumn(in, name)
                 : LoadCsv(in, config.file->column, name);
  } else {
    const SyntheticSource& g = *config.synthetic;
    series = g.kind == SyntheticKind::kSine
                 ? GenerateSinewave(g.n, g.amplitude, g.period, g.phase)
                 : GenerateLinearRamp(g.n, g.slope, g.intercept);
  }
  series = ForwardFill(series);
  if (config.truncate) series = series.Truncated(*config.truncate);
  return series;
}

ResolvedFilter ResolveFilter(const ExperimentConfig& config, KernelKind mode,
                             std::span<const EmbeddedSample> samples) {
  const int dim = static_cast<int>(config.order);
  ResolvedFilter r;
  r.filter.mu = config.mu;
  r.filter.epsilon = config.epsilon;
  r.filter.max_dictionary_size = config.max_dictionary_size;

  if (mode == KernelKind::kUnitNormGaussian) {
    const UnitNormSettings& u = config.unit_norm;
    if (u.lengthscale) {
      r.filter.kernel = KernelSpec::WithLengthscale(mode, *u.lengthscale, dim);
      r.lengthscale_source = "override";
    } else {
      r.filter.kernel = KernelSpec::UnitNormGaussian(u.l0, dim);
      r.lengthscale_source = "l0*sqrt(d)";
    }
    r.filter.novelty = {u.delta_dict, u.delta_pred};
    r.delta_dict_source = "fixed";
  } else {
    const BaselineSettings& b = config.baseline;
    if (!b.lengthscale || !b.delta_dict) {
      const double median =
          MedianPairwiseDistance(samples, b.heuristic_window);
      if (median < kMinMedianDistance) {
        throw ConfigError(
            "median pairwise input distance is zero; set "
            "baseline-lengthscale and baseline-delta-dict explicitly");
      }
      r.median_pairwise_distance = median;
    }
    const double median = r.median_pairwise_distance.value_or(0.0);
    r.filter.kernel = KernelSpec::Gaussian(b.lengthscale.value_or(median), dim);
    r.lengthscale_source = b.lengthscale ? "override" : "median-heuristic";
    r.filter.novelty = {b.delta_dict.value_or(b.delta_dict_factor * median),
                        b.delta_pred};
    r.delta_dict_source = b.delta_dict ? "override" : "factor*median";
    r.filter.scale_delta_pred_by_std = b.delta_pred_scaled_by_std;
    r.filter.normalized_step = !b.plain_lms;
  }
  r.filter.Validate();
  return r;
}

RunTrace RunFilter(const FilterConfig& config,
                   std::span<const EmbeddedSample> samples,
                   std::string series_name) {
  KlmsFilter filter(config);
  RunTrace trace;
  trace.series_name = std::move(series_name);
  trace.config = config;
  trace.outcomes.reserve(samples.size());
  for (const EmbeddedSample& s : samples) {
    trace.outcomes.push_back(filter.Step(s.input, s.target));
  }
  const auto centres = filter.dictionary().centres();
  trace.centres.assign(centres.begin(), centres.end());
  trace.weights.assign(filter.weights().begin(), filter.weights().end());
  return trace;
}

ExperimentResult RunOnSamples(const ExperimentConfig& config, KernelKind mode,
                              std::span<const EmbeddedSample> samples,
                              const TimeSeries& series) {
  ExperimentResult result;
  result.config = config;
  result.mode = mode;
  result.series_name = series.name;
  result.series_length = series.size();
  result.resolved = ResolveFilter(config, mode, samples);
  result.report = Summarize(
      RunFilter(result.resolved.filter, samples, series.name), config.nmse);
  return result;
}

ExperimentResult RunExperiment(const ExperimentConfig& config) {
  const TimeSeries series = LoadSeries(config);
  const std::vector<EmbeddedSample> samples = Embed(series, config.order);
  ExperimentResult result = RunOnSamples(config, config.mode, samples, series);
  if (!config.out_dir.empty()) WriteExperiment(result, config.out_dir);
  return result;
}

ComparisonReport RunComparison(const ExperimentConfig& baseline,
                               const ExperimentConfig& unit_norm) {
  baseline.Validate();
  unit_norm.Validate();
  if (!SameSource(baseline, unit_norm) ||
      baseline.truncate != unit_norm.truncate ||
      baseline.order != unit_norm.order) {
    throw ConfigError("comparison runs must share data source (" +
                      SourceLabel(baseline) + " vs " +
                      SourceLabel(unit_norm) + "), truncation and order");
  }
  const TimeSeries series = LoadSeries(baseline);
  const std::vector<EmbeddedSample> samples = Embed(series, baseline.order);

  auto other = std::async(std::launch::async, [&] {
    return RunOnSamples(unit_norm, unit_norm.mode, samples, series);
  });
  ComparisonReport report;
  report.baseline = RunOnSamples(baseline, baseline.mode, samples, series);
  report.unit_norm = other.get();
  report.nmse_delta = report.unit_norm.report.nmse - report.baseline.report.nmse;
  report.dict_size_ratio =
      static_cast<double>(report.unit_norm.report.final_dict_size) /
      static_cast<double>(report.baseline.report.final_dict_size);
  if (!baseline.out_dir.empty()) WriteComparison(report, baseline.out_dir);
  return report;
}

ComparisonReport RunComparison(const ExperimentConfig& config) {
  ExperimentConfig baseline = config;
  baseline.mode = KernelKind::kGaussian;
  ExperimentConfig unit_norm = config;
  unit_norm.mode = KernelKind::kUnitNormGaussian;
  return RunComparison(baseline, unit_norm);
}

}  // namespace kaf

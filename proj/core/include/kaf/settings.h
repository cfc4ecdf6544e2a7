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

#ifndef KAF_SETTINGS_H_
#define KAF_SETTINGS_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>

#include "kaf/kernels.h"
#include "kaf/metrics.h"

namespace kaf {

enum class SyntheticKind { kSine, kRamp };

struct SyntheticSource {
  SyntheticKind kind = SyntheticKind::kSine;
  std::size_t n = 500;
  double amplitude = 1.0;
  double period = 50.0;
  double phase = 0.0;
  double slope = 1.0;
  double intercept = 0.0;
};

struct FileSource {
  std::string path;
  std::string column;  // empty selects the last column
};

// Unit-norm KLMS thresholds and kernel width.
struct UnitNormSettings {
  double l0 = 2.0;
  std::optional<double> lengthscale;  // overrides l0 * sqrt(d)
  double delta_dict = 0.95;           // kernel similarity
  double delta_pred = 0.05;           // relative error
};

// Gaussian (baseline) KLMS settings. Unset values are derived from the
// median pairwise distance between the first `heuristic_window` inputs.
struct BaselineSettings {
  std::optional<double> lengthscale;  // default: the median distance
  std::optional<double> delta_dict;   // default: delta_dict_factor * median
  double delta_dict_factor = 1.0;
  double delta_pred = 0.05;
  bool delta_pred_scaled_by_std = true;  // threshold = delta_pred * std(y)
  std::size_t heuristic_window = 50;
  bool plain_lms = false;
};

struct ExperimentConfig {
  std::string name = "run";
  std::optional<FileSource> file;
  std::optional<SyntheticSource> synthetic;
  KernelKind mode = KernelKind::kUnitNormGaussian;
  std::size_t order = 10;
  double mu = 0.5;
  double epsilon = 1e-4;
  UnitNormSettings unit_norm;
  BaselineSettings baseline;
  std::optional<std::size_t> truncate;
  NmseVariant nmse = NmseVariant::kVariance;
  std::optional<std::size_t> max_dictionary_size;
  std::string out_dir;  // empty: nothing is written
  std::uint64_t seed = 0;

  // Exactly one data source, order >= 1, sane harness values. Filter
  // parameters are validated when the filter is built.
  void Validate() const;
};

// Flat key -> value settings, as read from a config file or the command
// line. Keys are the long flag names without the leading dashes.
using SettingsMap = std::map<std::string, std::string>;

// Parses "key = value" lines. '#' starts a comment; blank lines are ignored;
// a repeated key keeps its last value.
SettingsMap ParseSettings(std::istream& in);

// Which subcommand the settings are for. The mode-relative keys
// `lengthscale`, `delta-dict` and `delta-pred` apply to the selected mode for
// kRun and to the unit-norm filter for kCompare; `baseline-*` keys always
// target the Gaussian filter and take precedence.
enum class Verb { kRun, kCompare, kGenerate };

// Builds a config from built-in defaults overlaid with `settings`. Throws
// ConfigError for unknown keys or malformed values.
ExperimentConfig BuildExperimentConfig(const SettingsMap& settings, Verb verb);

// Every setting with its resolved value (defaults included). Feeding the
// result back through BuildExperimentConfig(.., Verb::kRun) reproduces the
// config.
SettingsMap ToSettings(const ExperimentConfig& config);

}  // namespace kaf

#endif  // KAF_SETTINGS_H_

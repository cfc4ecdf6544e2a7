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

#include "kaf/settings.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <string_view>
#include <system_error>

#include "kaf/errors.h"

namespace kaf {
namespace {

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string FormatDouble(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

bool IsAuto(const std::string& v) { return v == "auto" || v == "none"; }

double ParseDouble(const std::string& key, const std::string& v) {
  double out = 0.0;
  std::string_view s = v;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(out)) {
    throw ConfigError("setting '" + key + "': '" + v + "' is not a number");
  }
  return out;
}

std::uint64_t ParseUnsigned(const std::string& key, const std::string& v) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError("setting '" + key + "': '" + v +
                      "' is not a nonnegative integer");
  }
  return out;
}

bool ParseBool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("setting '" + key + "': '" + v + "' is not a boolean");
}

std::optional<double> ParseOptionalDouble(const std::string& key,
                                          const std::string& v) {
  if (IsAuto(v)) return std::nullopt;
  return ParseDouble(key, v);
}

std::optional<std::size_t> ParseOptionalSize(const std::string& key,
                                             const std::string& v) {
  if (IsAuto(v)) return std::nullopt;
  return ParseUnsigned(key, v);
}

KernelKind ParseMode(const std::string& v) {
  if (v == "gaussian") return KernelKind::kGaussian;
  if (v == "unitnorm") return KernelKind::kUnitNormGaussian;
  throw ConfigError("mode must be 'gaussian' or 'unitnorm', got '" + v + "'");
}

SyntheticSource& Synthetic(ExperimentConfig& c) {
  if (!c.synthetic) c.synthetic.emplace();
  return *c.synthetic;
}

FileSource& File(ExperimentConfig& c) {
  if (!c.file) c.file.emplace();
  return *c.file;
}

using Setter = std::function<void(ExperimentConfig&, const std::string&,
                                  const std::string&)>;

// Keys whose target depends on the verb and mode.
constexpr std::array<std::string_view, 3> kRoutedKeys = {
    "lengthscale", "delta-dict", "delta-pred"};

const std::map<std::string, Setter, std::less<>>& Setters() {
  static const auto* setters = new std::map<std::string, Setter, std::less<>>{
      {"name", [](auto& c, auto&, auto& v) { c.name = v; }},
      {"data", [](auto& c, auto&, auto& v) { File(c).path = v; }},
      {"column", [](auto& c, auto&, auto& v) { File(c).column = v; }},
      {"synthetic",
       [](auto& c, auto&, auto& v) {
         if (v == "sine") {
           Synthetic(c).kind = SyntheticKind::kSine;
         } else if (v == "ramp") {
           Synthetic(c).kind = SyntheticKind::kRamp;
         } else {
           throw ConfigError("synthetic must be 'sine' or 'ramp', got '" + v +
                             "'");
         }
       }},
      {"n", [](auto& c, auto& k, auto& v) { Synthetic(c).n = ParseUnsigned(k, v); }},
      {"amplitude",
       [](auto& c, auto& k, auto& v) { Synthetic(c).amplitude = ParseDouble(k, v); }},
      {"period",
       [](auto& c, auto& k, auto& v) { Synthetic(c).period = ParseDouble(k, v); }},
      {"phase",
       [](auto& c, auto& k, auto& v) { Synthetic(c).phase = ParseDouble(k, v); }},
      {"slope",
       [](auto& c, auto& k, auto& v) { Synthetic(c).slope = ParseDouble(k, v); }},
      {"intercept",
       [](auto& c, auto& k, auto& v) { Synthetic(c).intercept = ParseDouble(k, v); }},
      {"mode", [](auto& c, auto&, auto& v) { c.mode = ParseMode(v); }},
      {"order", [](auto& c, auto& k, auto& v) { c.order = ParseUnsigned(k, v); }},
      {"mu", [](auto& c, auto& k, auto& v) { c.mu = ParseDouble(k, v); }},
      {"epsilon", [](auto& c, auto& k, auto& v) { c.epsilon = ParseDouble(k, v); }},
      {"l0", [](auto& c, auto& k, auto& v) { c.unit_norm.l0 = ParseDouble(k, v); }},
      {"unitnorm-lengthscale",
       [](auto& c, auto& k, auto& v) {
         c.unit_norm.lengthscale = ParseOptionalDouble(k, v);
       }},
      {"unitnorm-delta-dict",
       [](auto& c, auto& k, auto& v) { c.unit_norm.delta_dict = ParseDouble(k, v); }},
      {"unitnorm-delta-pred",
       [](auto& c, auto& k, auto& v) { c.unit_norm.delta_pred = ParseDouble(k, v); }},
      {"baseline-lengthscale",
       [](auto& c, auto& k, auto& v) {
         c.baseline.lengthscale = ParseOptionalDouble(k, v);
       }},
      {"baseline-delta-dict",
       [](auto& c, auto& k, auto& v) {
         c.baseline.delta_dict = ParseOptionalDouble(k, v);
       }},
      {"baseline-delta-dict-factor",
       [](auto& c, auto& k, auto& v) {
         c.baseline.delta_dict_factor = ParseDouble(k, v);
       }},
      {"baseline-delta-pred",
       [](auto& c, auto& k, auto& v) { c.baseline.delta_pred = ParseDouble(k, v); }},
      {"baseline-delta-pred-scale",
       [](auto& c, auto&, auto& v) {
         if (v == "std") {
           c.baseline.delta_pred_scaled_by_std = true;
         } else if (v == "absolute") {
           c.baseline.delta_pred_scaled_by_std = false;
         } else {
           throw ConfigError(
               "baseline-delta-pred-scale must be 'std' or 'absolute', got '" +
               v + "'");
         }
       }},
      {"baseline-heuristic-window",
       [](auto& c, auto& k, auto& v) {
         c.baseline.heuristic_window = ParseUnsigned(k, v);
       }},
      {"plain-lms",
       [](auto& c, auto& k, auto& v) { c.baseline.plain_lms = ParseBool(k, v); }},
      {"truncate",
       [](auto& c, auto& k, auto& v) { c.truncate = ParseOptionalSize(k, v); }},
      {"nmse",
       [](auto& c, auto&, auto& v) {
         const auto variant = ParseNmseVariant(v);
         if (!variant) {
           throw ConfigError("nmse must be 'variance' or 'power', got '" + v +
                             "'");
         }
         c.nmse = *variant;
       }},
      {"max-dict-size",
       [](auto& c, auto& k, auto& v) {
         c.max_dictionary_size = ParseOptionalSize(k, v);
       }},
      {"out", [](auto& c, auto&, auto& v) { c.out_dir = v; }},
      {"seed", [](auto& c, auto& k, auto& v) { c.seed = ParseUnsigned(k, v); }},
  };
  return *setters;
}

}  // namespace

void ExperimentConfig::Validate() const {
  if (file.has_value() == synthetic.has_value()) {
    throw ConfigError(
        "exactly one data source is required: a data file or a synthetic "
        "signal");
  }
  if (file && file->path.empty()) throw ConfigError("data path is empty");
  if (order < 1) throw ConfigError("order must be >= 1");
  if (truncate && *truncate == 0) throw ConfigError("truncate must be >= 1");
  if (baseline.heuristic_window < 2) {
    throw ConfigError("baseline-heuristic-window must be >= 2");
  }
  if (!(baseline.delta_dict_factor > 0.0)) {
    throw ConfigError("baseline-delta-dict-factor must be positive");
  }
  if (name.empty() || name.find('/') != std::string::npos) {
    throw ConfigError("name must be a nonempty file-name-safe string");
  }
}

SettingsMap ParseSettings(std::istream& in) {
  SettingsMap out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string trimmed = Trim(line);
    if (trimmed.empty()) continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected 'key = value'");
    }
    std::string key = Trim(std::string_view(trimmed).substr(0, eq));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": empty key");
    }
    out[std::move(key)] = Trim(std::string_view(trimmed).substr(eq + 1));
  }
  return out;
}

ExperimentConfig BuildExperimentConfig(const SettingsMap& settings,
                                       Verb verb) {
  ExperimentConfig config;
  if (const auto it = settings.find("mode"); it != settings.end()) {
    config.mode = ParseMode(it->second);
  }
  const bool routed_to_baseline =
      verb == Verb::kRun && config.mode == KernelKind::kGaussian;

  SettingsMap resolved;
  for (const auto& [key, value] : settings) {
    const bool routed = std::find(kRoutedKeys.begin(), kRoutedKeys.end(),
                                  key) != kRoutedKeys.end();
    if (!routed) {
      resolved[key] = value;
      continue;
    }
    const std::string target =
        (routed_to_baseline ? "baseline-" : "unitnorm-") + key;
    // Explicit mode-prefixed keys win over the routed generic ones.
    resolved.try_emplace(target, value);
  }
  for (const auto& [key, value] : settings) {
    if (key.starts_with("baseline-") || key.starts_with("unitnorm-")) {
      resolved[key] = value;
    }
  }

  for (const auto& [key, value] : resolved) {
    const auto it = Setters().find(key);
    if (it == Setters().end()) {
      throw ConfigError("unknown setting '" + key + "'");
    }
    it->second(config, key, value);
  }
  if (verb == Verb::kRun && config.mode == KernelKind::kUnitNormGaussian &&
      config.baseline.plain_lms) {
    throw ConfigError("plain-lms applies to the Gaussian baseline only");
  }
  return config;
}

SettingsMap ToSettings(const ExperimentConfig& c) {
  SettingsMap s;
  auto optional_double = [](const std::optional<double>& v) {
    return v ? FormatDouble(*v) : std::string("auto");
  };
  auto optional_size = [](const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string("none");
  };
  s["name"] = c.name;
  if (c.file) {
    s["data"] = c.file->path;
    s["column"] = c.file->column;
  }
  if (c.synthetic) {
    const SyntheticSource& g = *c.synthetic;
    s["synthetic"] = g.kind == SyntheticKind::kSine ? "sine" : "ramp";
    s["n"] = std::to_string(g.n);
    if (g.kind == SyntheticKind::kSine) {
      s["amplitude"] = FormatDouble(g.amplitude);
      s["period"] = FormatDouble(g.period);
      s["phase"] = FormatDouble(g.phase);
    } else {
      s["slope"] = FormatDouble(g.slope);
      s["intercept"] = FormatDouble(g.intercept);
    }
  }
  s["mode"] = std::string(KernelKindName(c.mode));
  s["order"] = std::to_string(c.order);
  s["mu"] = FormatDouble(c.mu);
  s["epsilon"] = FormatDouble(c.epsilon);
  s["l0"] = FormatDouble(c.unit_norm.l0);
  s["unitnorm-lengthscale"] = optional_double(c.unit_norm.lengthscale);
  s["unitnorm-delta-dict"] = FormatDouble(c.unit_norm.delta_dict);
  s["unitnorm-delta-pred"] = FormatDouble(c.unit_norm.delta_pred);
  s["baseline-lengthscale"] = optional_double(c.baseline.lengthscale);
  s["baseline-delta-dict"] = optional_double(c.baseline.delta_dict);
  s["baseline-delta-dict-factor"] = FormatDouble(c.baseline.delta_dict_factor);
  s["baseline-delta-pred"] = FormatDouble(c.baseline.delta_pred);
  s["baseline-delta-pred-scale"] =
      c.baseline.delta_pred_scaled_by_std ? "std" : "absolute";
  s["baseline-heuristic-window"] = std::to_string(c.baseline.heuristic_window);
  s["plain-lms"] = c.baseline.plain_lms ? "true" : "false";
  s["truncate"] = optional_size(c.truncate);
  s["nmse"] = std::string(NmseVariantName(c.nmse));
  s["max-dict-size"] = optional_size(c.max_dictionary_size);
  s["out"] = c.out_dir;
  s["seed"] = std::to_string(c.seed);
  return s;
}

}  // namespace kaf

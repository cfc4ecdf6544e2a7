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

// kaf: run kernel adaptive filtering experiments from the command line.
//
//   kaf run      --data co2.csv --column co2 --mode unitnorm --out results/
//   kaf compare  --data sunspots.csv --truncate 250 --out results/
//   kaf gen      --synthetic ramp --n 2000 --out data/
//
// Settings come from built-in defaults, then --config <file>, then flags.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kaf/errors.h"
#include "kaf/experiment.h"
#include "kaf/report.h"
#include "kaf/settings.h"
#include "kaf/timeseries.h"

namespace {

enum ExitCode : int {
  kOk = 0,
  kConfigExit = 2,
  kIngestionExit = 3,
  kNumericExit = 4,
  kIoExit = 5,
};

// Value-taking flags; each maps 1:1 onto a settings key.
const std::vector<std::pair<std::string, std::string>>& ValueFlags() {
  static const std::vector<std::pair<std::string, std::string>> flags = {
      {"data", "CSV file with the series"},
      {"column", "CSV column name or 0-based index (default: last column)"},
      {"synthetic", "synthetic signal: sine | ramp"},
      {"n", "synthetic signal length"},
      {"amplitude", "sinewave amplitude"},
      {"period", "sinewave period in samples"},
      {"phase", "sinewave phase in radians"},
      {"slope", "ramp slope"},
      {"intercept", "ramp intercept"},
      {"order", "filter order d (regressor length)"},
      {"mode", "kernel for `run`: gaussian | unitnorm"},
      {"mu", "learning rate in (0, 1)"},
      {"epsilon", "step-size regularizer (> 0)"},
      {"l0", "unit-norm lengthscale per coordinate (l = l0 sqrt(d))"},
      {"lengthscale", "raw kernel lengthscale override"},
      {"delta-dict", "dictionary novelty threshold"},
      {"delta-pred", "prediction-error threshold"},
      {"truncate", "keep only the first n samples"},
      {"nmse", "NMSE normalization: variance | power"},
      {"out", "output directory"},
      {"name", "run name (report file prefix)"},
      {"seed", "random seed recorded in the report"},
      {"max-dict-size", "abort if the dictionary would exceed this size"},
      {"unitnorm-lengthscale", "unit-norm lengthscale override"},
      {"unitnorm-delta-dict", "unit-norm similarity threshold in [0, 1)"},
      {"unitnorm-delta-pred", "unit-norm relative error threshold"},
      {"baseline-lengthscale", "Gaussian lengthscale (default: median distance)"},
      {"baseline-delta-dict", "Gaussian distance threshold"},
      {"baseline-delta-dict-factor", "Gaussian threshold as a multiple of the median distance"},
      {"baseline-delta-pred", "Gaussian error threshold"},
      {"baseline-delta-pred-scale", "std | absolute"},
      {"baseline-heuristic-window", "inputs used by the median heuristic"},
  };
  return flags;
}

struct Command {
  CLI::App* app = nullptr;
  kaf::Verb verb = kaf::Verb::kRun;
  std::map<std::string, std::string> values;
  std::string config_path;
  bool plain_lms = false;
};

void AddOptions(Command& cmd) {
  for (const auto& [flag, help] : ValueFlags()) {
    cmd.app->add_option("--" + flag, cmd.values[flag], help);
  }
  cmd.app->add_option("--config", cmd.config_path,
                      "key = value settings file (flags take precedence)");
  cmd.app->add_flag("--plain-lms", cmd.plain_lms,
                    "fixed-step LMS for the Gaussian baseline");
}

kaf::SettingsMap CollectSettings(const Command& cmd) {
  kaf::SettingsMap settings;
  if (!cmd.config_path.empty()) {
    std::ifstream in(cmd.config_path);
    if (!in) {
      throw kaf::ConfigError("cannot open config file '" + cmd.config_path +
                             "'");
    }
    settings = kaf::ParseSettings(in);
  }
  for (const auto& [flag, help] : ValueFlags()) {
    if (cmd.app->count("--" + flag) > 0) settings[flag] = cmd.values.at(flag);
  }
  if (cmd.plain_lms) settings["plain-lms"] = "true";
  return settings;
}

void PrintRun(const std::string& label, const kaf::ExperimentResult& r) {
  std::printf("%-9s %-8s nmse=%.6g final_dict_size=%zu steps=%zu\n",
              label.c_str(), std::string(kaf::KernelKindName(r.mode)).c_str(),
              r.report.nmse, r.report.final_dict_size,
              r.report.trace.outcomes.size());
}

int Execute(const Command& cmd) {
  const kaf::SettingsMap settings = CollectSettings(cmd);
  kaf::ExperimentConfig config = kaf::BuildExperimentConfig(settings, cmd.verb);

  switch (cmd.verb) {
    case kaf::Verb::kRun: {
      const kaf::ExperimentResult result = kaf::RunExperiment(config);
      PrintRun(config.name, result);
      break;
    }
    case kaf::Verb::kCompare: {
      const kaf::ComparisonReport report = kaf::RunComparison(config);
      PrintRun("baseline", report.baseline);
      PrintRun("unitnorm", report.unit_norm);
      std::printf("nmse_delta=%.6g dict_size_ratio=%.6g\n", report.nmse_delta,
                  report.dict_size_ratio);
      break;
    }
    case kaf::Verb::kGenerate: {
      if (!config.synthetic || config.file) {
        throw kaf::ConfigError("gen needs --synthetic and no --data");
      }
      if (config.out_dir.empty()) throw kaf::ConfigError("gen needs --out");
      const kaf::TimeSeries series = kaf::LoadSeries(config);
      const std::string name = settings.count("name") ? config.name
                                                      : series.name;
      std::string csv = "value\n";
      for (double v : series.Dense()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g\n", v);
        csv += buf;
      }
      std::error_code ec;
      std::filesystem::create_directories(config.out_dir, ec);
      if (ec) {
        throw kaf::IoError("cannot create output directory '" +
                           config.out_dir + "'");
      }
      const auto path = std::filesystem::path(config.out_dir) / (name + ".csv");
      kaf::WriteFileAtomic(path, csv);
      std::printf("%s\n", path.string().c_str());
      break;
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel adaptive filtering experiments (Gaussian and "
               "unit-norm Gaussian KLMS)"};
  app.require_subcommand(1);

  Command run{app.add_subcommand("run", "run one filter on one series"),
              kaf::Verb::kRun};
  Command compare{
      app.add_subcommand("compare", "Gaussian baseline vs unit-norm KLMS"),
      kaf::Verb::kCompare};
  Command gen{app.add_subcommand("gen", "write a synthetic series to CSV"),
              kaf::Verb::kGenerate};
  for (Command* c : {&run, &compare, &gen}) AddOptions(*c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigExit;
  }

  const Command& cmd = run.app->parsed()       ? run
                       : compare.app->parsed() ? compare
                                               : gen;
  try {
    return Execute(cmd);
  } catch (const kaf::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigExit;
  } catch (const kaf::IngestionError& e) {
    std::cerr << "ingestion error: " << e.what() << "\n";
    return kIngestionExit;
  } catch (const kaf::NumericFault& e) {
    std::cerr << "numeric fault: " << e.what() << "\n";
    return kNumericExit;
  } catch (const kaf::CapacityError& e) {
    std::cerr << "run aborted: " << e.what() << "\n";
    return kNumericExit;
  } catch (const kaf::UndefinedMetricError& e) {
    std::cerr << "numeric fault: " << e.what() << "\n";
    return kNumericExit;
  } catch (const kaf::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIoExit;
  } catch (const kaf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigExit;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

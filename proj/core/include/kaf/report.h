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

#ifndef KAF_REPORT_H_
#define KAF_REPORT_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "kaf/experiment.h"

namespace kaf {

// JSON summary of one run: resolved settings, derived filter parameters,
// metrics, growth curve and dictionary.
std::string RunReportJson(const ExperimentResult& result);

// Side-by-side JSON for a comparison.
std::string ComparisonJson(const ComparisonReport& comparison);

// index,target,prediction,error,centre_added,dict_size (one row per step).
std::string StepsCsv(const RunReport& report);

// step,original_norm,weight,c0,c1,... (one row per centre).
std::string CentresCsv(const RunReport& report);

// Writes to a temporary sibling and renames it into place. Throws IoError.
void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view contents);

struct PlotFiles {
  std::filesystem::path steps;
  std::filesystem::path centres;
};

// <dir>/<prefix>.steps.csv and <dir>/<prefix>.centres.csv.
PlotFiles EmitPlotData(const RunReport& report,
                       const std::filesystem::path& dir,
                       const std::string& prefix);

// <dir>/<name>.report.json plus the plot files.
void WriteExperiment(const ExperimentResult& result,
                     const std::filesystem::path& dir);

// <dir>/comparison.json plus both runs' files (prefixes "baseline" and
// "unitnorm").
void WriteComparison(const ComparisonReport& comparison,
                     const std::filesystem::path& dir);

}  // namespace kaf

#endif  // KAF_REPORT_H_

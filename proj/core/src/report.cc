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

#include "kaf/report.h"

#include <array>
#include <charconv>
#include <fstream>
#include <system_error>

#include <nlohmann/json.hpp>

#include "kaf/errors.h"

namespace kaf {
namespace {

using nlohmann::json;

void AppendDouble(std::string& out, double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  out.append(buf.data(), ptr);
}

json OptionalNumber(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

json ResolvedJson(const ResolvedFilter& r) {
  const FilterConfig& f = r.filter;
  json kernel = {
      {"kind", KernelKindName(f.kernel.kind())},
      {"order", f.kernel.dim()},
      {"lengthscale", f.kernel.lengthscale()},
      {"l0", f.kernel.per_coordinate()},
      {"lengthscale_source", r.lengthscale_source},
      {"median_pairwise_distance", OptionalNumber(r.median_pairwise_distance)},
  };
  json novelty = {
      {"delta_dict", f.novelty.delta_dict},
      {"delta_dict_source", r.delta_dict_source},
      {"delta_pred", f.novelty.delta_pred},
      {"delta_pred_scale",
       f.kernel.kind() == KernelKind::kUnitNormGaussian
           ? "relative"
           : (f.scale_delta_pred_by_std ? "std" : "absolute")},
  };
  return {
      {"kernel", kernel},
      {"novelty", novelty},
      {"mu", f.mu},
      {"epsilon", f.epsilon},
      {"normalized_step", f.normalized_step},
      {"max_dictionary_size", f.max_dictionary_size
                                  ? json(*f.max_dictionary_size)
                                  : json(nullptr)},
  };
}

json RunJson(const ExperimentResult& r) {
  const RunReport& rep = r.report;
  json growth = json::array();
  for (const GrowthPoint& p : rep.growth_curve) {
    growth.push_back({p.step, p.dict_size});
  }
  json centres = json::array();
  for (std::size_t j = 0; j < rep.trace.centres.size(); ++j) {
    const Centre& c = rep.trace.centres[j];
    centres.push_back({
        {"step", c.added_at},
        {"original_norm", c.original_norm},
        {"weight", rep.trace.weights[j]},
        {"vector", std::vector<double>(c.vector.values().begin(),
                                       c.vector.values().end())},
    });
  }
  json settings = json::object();
  for (const auto& [key, value] : ToSettings(r.config)) settings[key] = value;
  settings["mode"] = KernelKindName(r.mode);

  return {
      {"name", r.config.name},
      {"series", r.series_name},
      {"series_length", r.series_length},
      {"mode", KernelKindName(r.mode)},
      {"settings", settings},
      {"filter", ResolvedJson(r.resolved)},
      {"summary",
       {
           {"steps", rep.trace.outcomes.size()},
           {"scored_steps", rep.scored_steps},
           {"nmse_variant", NmseVariantName(rep.nmse_variant)},
           {"nmse", rep.nmse},
           {"nmse_first_quarter", OptionalNumber(rep.nmse_first_quarter)},
           {"nmse_last_quarter", OptionalNumber(rep.nmse_last_quarter)},
           {"final_dict_size", rep.final_dict_size},
           {"max_abs_weight", rep.max_abs_weight},
       }},
      {"growth_curve", growth},
      {"centres", centres},
  };
}

void WriteRun(const ExperimentResult& result, const std::filesystem::path& dir,
              const std::string& prefix) {
  WriteFileAtomic(dir / (prefix + ".report.json"),
                  RunJson(result).dump(2) + "\n");
  EmitPlotData(result.report, dir, prefix);
}

void EnsureDirectory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create output directory '" + dir.string() +
                  "': " + ec.message());
  }
}

}  // namespace

std::string RunReportJson(const ExperimentResult& result) {
  return RunJson(result).dump(2) + "\n";
}

std::string ComparisonJson(const ComparisonReport& c) {
  const json out = {
      {"baseline", RunJson(c.baseline)},
      {"unitnorm", RunJson(c.unit_norm)},
      {"nmse_delta", c.nmse_delta},
      {"dict_size_ratio", c.dict_size_ratio},
  };
  return out.dump(2) + "\n";
}

std::string StepsCsv(const RunReport& report) {
  std::string out = "index,target,prediction,error,centre_added,dict_size\n";
  for (const StepOutcome& o : report.trace.outcomes) {
    out += std::to_string(o.index);
    out += ',';
    AppendDouble(out, o.target);
    out += ',';
    AppendDouble(out, o.prediction);
    out += ',';
    AppendDouble(out, o.error);
    out += o.centre_added ? ",1," : ",0,";
    out += std::to_string(o.dict_size);
    out += '\n';
  }
  return out;
}

std::string CentresCsv(const RunReport& report) {
  const auto& centres = report.trace.centres;
  const std::size_t dim = centres.empty()
                              ? static_cast<std::size_t>(
                                    report.trace.config.kernel.dim())
                              : centres.front().vector.dim();
  std::string out = "step,original_norm,weight";
  for (std::size_t k = 0; k < dim; ++k) out += ",c" + std::to_string(k);
  out += '\n';
  for (std::size_t j = 0; j < centres.size(); ++j) {
    out += std::to_string(centres[j].added_at);
    out += ',';
    AppendDouble(out, centres[j].original_norm);
    out += ',';
    AppendDouble(out, report.trace.weights[j]);
    for (double v : centres[j].vector.values()) {
      out += ',';
      AppendDouble(out, v);
    }
    out += '\n';
  }
  return out;
}

void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw IoError("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move '" + tmp.string() + "' to '" + path.string() +
                  "'");
  }
}

PlotFiles EmitPlotData(const RunReport& report,
                       const std::filesystem::path& dir,
                       const std::string& prefix) {
  EnsureDirectory(dir);
  PlotFiles files{dir / (prefix + ".steps.csv"),
                  dir / (prefix + ".centres.csv")};
  WriteFileAtomic(files.steps, StepsCsv(report));
  WriteFileAtomic(files.centres, CentresCsv(report));
  return files;
}

void WriteExperiment(const ExperimentResult& result,
                     const std::filesystem::path& dir) {
  EnsureDirectory(dir);
  WriteRun(result, dir, result.config.name);
}

void WriteComparison(const ComparisonReport& comparison,
                     const std::filesystem::path& dir) {
  EnsureDirectory(dir);
  WriteRun(comparison.baseline, dir, "baseline");
  WriteRun(comparison.unit_norm, dir, "unitnorm");
  WriteFileAtomic(dir / "comparison.json", ComparisonJson(comparison));
}

}  // namespace kaf

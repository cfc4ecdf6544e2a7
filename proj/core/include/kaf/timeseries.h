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

#ifndef KAF_TIMESERIES_H_
#define KAF_TIMESERIES_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "kaf/kernels.h"

namespace kaf {

// A scalar series. std::nullopt marks a missing observation.
struct TimeSeries {
  std::string name;
  std::vector<std::optional<double>> values;

  static TimeSeries FromValues(std::string name, std::vector<double> values);

  std::size_t size() const { return values.size(); }
  bool HasMissing() const;
  // Values as plain doubles. Throws IngestionError if any value is missing.
  std::vector<double> Dense() const;
  // First n values (all of them if n >= size()).
  TimeSeries Truncated(std::size_t n) const;
};

// Regressor x_i = [y_{i-d}, ..., y_{i-1}] and target y_i.
struct EmbeddedSample {
  InputVector input;
  double target = 0.0;
  std::size_t index = 0;  // position of the target in the series
};

// Replaces each missing value with the closest preceding observed value.
// A leading missing value is an IngestionError.
TimeSeries ForwardFill(const TimeSeries& series);

// One sample per target index d .. size()-1. Requires size() > d.
std::vector<EmbeddedSample> Embed(const TimeSeries& series, std::size_t order);

// y_i = amplitude * sin(2 pi i / period + phase), i = 0 .. n-1.
TimeSeries GenerateSinewave(std::size_t n, double amplitude, double period,
                            double phase);

// y_i = intercept + slope * i, i = 0 .. n-1.
TimeSeries GenerateLinearRamp(std::size_t n, double slope, double intercept);

// Reads one column of a comma-separated file. `column` is a header name, or
// a 0-based index when it is all digits and does not name a header cell.
// Empty cells and "NaN"/"nan" become missing values.
//
// A header line is required when selecting by name. When selecting by
// index, the first line is a header iff one of its cells is neither a
// number nor a missing token. Row numbers in errors are 1-based data rows.
TimeSeries LoadCsv(std::istream& in, const std::string& column,
                   std::string name = "series");

// Selects the last column.
TimeSeries LoadCsvLastColumn(std::istream& in, std::string name = "series");

}  // namespace kaf

#endif  // KAF_TIMESERIES_H_

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

#include "kaf/timeseries.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string_view>
#include <utility>

#include "kaf/errors.h"

namespace kaf {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  s = s.substr(first, last - first + 1);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

std::vector<std::string> SplitLine(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    const auto cell = line.substr(
        start, comma == std::string_view::npos ? line.size() - start
                                               : comma - start);
    cells.emplace_back(Trim(cell));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

bool IsMissingToken(std::string_view cell) {
  return cell.empty() || cell == "NaN" || cell == "nan";
}

std::optional<double> ParseNumber(std::string_view cell) {
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size() ||
      !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

bool IsAllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

std::vector<std::string> ReadLines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  if (in.bad()) throw IngestionError("failed while reading CSV input");
  return lines;
}

bool LooksLikeHeader(const std::vector<std::string>& cells) {
  return std::any_of(cells.begin(), cells.end(), [](const std::string& c) {
    return !IsMissingToken(c) && !ParseNumber(c);
  });
}

// Shared by LoadCsv and LoadCsvLastColumn. `column` empty selects the last.
TimeSeries LoadColumn(std::istream& in, const std::string& column,
                      std::string name) {
  const std::vector<std::string> lines = ReadLines(in);
  if (lines.empty()) throw IngestionError("CSV input is empty");

  const std::vector<std::string> first = SplitLine(lines.front());
  std::optional<std::size_t> col;
  bool has_header = false;
  if (column.empty()) {
    has_header = LooksLikeHeader(first);
    col = first.size() - 1;
  } else if (IsAllDigits(column) && !LooksLikeHeader(first)) {
    col = std::stoul(column);
  } else {
    const auto it = std::find(first.begin(), first.end(), column);
    if (it != first.end()) {
      has_header = true;
      col = static_cast<std::size_t>(it - first.begin());
    } else if (IsAllDigits(column)) {
      has_header = LooksLikeHeader(first);
      col = std::stoul(column);
    }
  }
  if (!col) throw IngestionError("CSV has no column named '" + column + "'");
  if (has_header && *col >= first.size()) {
    throw IngestionError("CSV column index " + std::to_string(*col) +
                         " is out of range (header has " +
                         std::to_string(first.size()) + " columns)");
  }

  TimeSeries series;
  series.name = std::move(name);
  const std::size_t begin = has_header ? 1 : 0;
  for (std::size_t li = begin; li < lines.size(); ++li) {
    const std::size_t row = li - begin + 1;
    const std::vector<std::string> cells = SplitLine(lines[li]);
    // A blank line is one empty cell: a missing value in every column.
    const bool blank = cells.size() == 1 && cells.front().empty();
    if (!blank && *col >= cells.size()) {
      throw IngestionError("CSV row " + std::to_string(row) + " has only " +
                           std::to_string(cells.size()) +
                           " columns, column " + std::to_string(*col) +
                           " requested");
    }
    const std::string_view cell = blank ? std::string_view{} : cells[*col];
    if (IsMissingToken(cell)) {
      series.values.push_back(std::nullopt);
      continue;
    }
    const auto value = ParseNumber(cell);
    if (!value) {
      throw IngestionError("CSV row " + std::to_string(row) + ", column " +
                           std::to_string(*col) + ": cannot parse '" +
                           std::string(cell) + "' as a number");
    }
    series.values.push_back(*value);
  }
  return series;
}

}  // namespace

TimeSeries TimeSeries::FromValues(std::string name,
                                  std::vector<double> values) {
  TimeSeries s;
  s.name = std::move(name);
  s.values.assign(values.begin(), values.end());
  return s;
}

bool TimeSeries::HasMissing() const {
  return std::any_of(values.begin(), values.end(),
                     [](const auto& v) { return !v.has_value(); });
}

std::vector<double> TimeSeries::Dense() const {
  std::vector<double> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i]) {
      throw IngestionError("series '" + name + "' has a missing value at " +
                           "index " + std::to_string(i));
    }
    out.push_back(*values[i]);
  }
  return out;
}

TimeSeries TimeSeries::Truncated(std::size_t n) const {
  TimeSeries out;
  out.name = name;
  out.values.assign(values.begin(),
                    values.begin() + std::min(n, values.size()));
  return out;
}

TimeSeries ForwardFill(const TimeSeries& series) {
  TimeSeries out = series;
  std::optional<double> last;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    if (out.values[i]) {
      last = out.values[i];
    } else if (last) {
      out.values[i] = last;
    } else {
      throw IngestionError("series '" + series.name +
                           "' starts with a missing value at index " +
                           std::to_string(i) + "; nothing to carry forward");
    }
  }
  return out;
}

std::vector<EmbeddedSample> Embed(const TimeSeries& series,
                                  std::size_t order) {
  if (order < 1) throw ConfigError("filter order must be >= 1");
  if (series.size() <= order) {
    throw IngestionError("series '" + series.name + "' has " +
                         std::to_string(series.size()) +
                         " values; order " + std::to_string(order) +
                         " needs at least " + std::to_string(order + 1));
  }
  const std::vector<double> y = series.Dense();
  std::vector<EmbeddedSample> samples;
  samples.reserve(y.size() - order);
  for (std::size_t i = order; i < y.size(); ++i) {
    samples.push_back(EmbeddedSample{
        InputVector(std::vector<double>(y.begin() + (i - order),
                                        y.begin() + i)),
        y[i], i});
  }
  return samples;
}

TimeSeries GenerateSinewave(std::size_t n, double amplitude, double period,
                            double phase) {
  if (n < 1) throw ConfigError("sinewave length must be >= 1");
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw ConfigError("sinewave period must be positive, got " +
                      std::to_string(period));
  }
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = amplitude * std::sin(2.0 * std::numbers::pi *
                                    static_cast<double>(i) / period +
                                phase);
  }
  return TimeSeries::FromValues("sine", std::move(y));
}

TimeSeries GenerateLinearRamp(std::size_t n, double slope, double intercept) {
  if (n < 1) throw ConfigError("ramp length must be >= 1");
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = intercept + slope * static_cast<double>(i);
  }
  return TimeSeries::FromValues("ramp", std::move(y));
}

TimeSeries LoadCsv(std::istream& in, const std::string& column,
                   std::string name) {
  if (column.empty()) throw ConfigError("CSV column name must not be empty");
  return LoadColumn(in, column, std::move(name));
}

TimeSeries LoadCsvLastColumn(std::istream& in, std::string name) {
  return LoadColumn(in, "", std::move(name));
}

}  // namespace kaf

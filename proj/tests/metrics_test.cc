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

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "kaf/errors.h"

namespace kaf {
namespace {

TEST(NmseTest, PerfectPredictorIsZero) {
  const std::vector<double> y{1, 2, 3, 4};
  EXPECT_EQ(Nmse(y, y), 0.0);
  EXPECT_EQ(Nmse(y, y, NmseVariant::kPower), 0.0);
}

TEST(NmseTest, MeanPredictorIsOne) {
  const std::vector<double> y{1, 2, 3, 4};
  const std::vector<double> p(4, 2.5);
  EXPECT_DOUBLE_EQ(Nmse(y, p), 1.0);
}

TEST(NmseTest, ZeroPredictorIsOneUnderPower) {
  const std::vector<double> y{1, -2, 3, 5};
  const std::vector<double> p(4, 0.0);
  EXPECT_DOUBLE_EQ(Nmse(y, p, NmseVariant::kPower), 1.0);
}

TEST(NmseTest, MatchesDirectFormula) {
  std::mt19937_64 rng(43);
  std::normal_distribution<double> normal;
  std::vector<double> y(97);
  std::vector<double> p(97);
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = 3.0 + normal(rng);
    p[i] = y[i] + 0.3 * normal(rng);
  }
  long double mean = 0;
  for (double v : y) mean += v;
  mean /= y.size();
  long double num = 0, var = 0, pow = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    num += (y[i] - p[i]) * static_cast<long double>(y[i] - p[i]);
    var += (y[i] - mean) * (y[i] - mean);
    pow += y[i] * static_cast<long double>(y[i]);
  }
  EXPECT_NEAR(Nmse(y, p), static_cast<double>(num / var), 1e-12);
  EXPECT_NEAR(Nmse(y, p, NmseVariant::kPower),
              static_cast<double>(num / pow), 1e-12);
}

TEST(NmseTest, JointScaleAndShiftInvariance) {
  std::mt19937_64 rng(45);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> y(64);
    std::vector<double> p(64);
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] = normal(rng);
      p[i] = 0.8 * y[i] + 0.4 * normal(rng);
    }
    const double base = Nmse(y, p);
    const double c = (trial % 2 ? -1.0 : 1.0) * std::pow(10.0, 3 * uniform(rng));
    const double b = 5.0 * uniform(rng);
    std::vector<double> ys(y), ps(p), yt(y), pt(p);
    for (std::size_t i = 0; i < y.size(); ++i) {
      ys[i] *= c;
      ps[i] *= c;
      yt[i] += b;
      pt[i] += b;
    }
    EXPECT_NEAR(Nmse(ys, ps) / base, 1.0, 1e-12);
    EXPECT_NEAR(Nmse(yt, pt) / base, 1.0, 1e-12);
    EXPECT_NEAR(Nmse(ys, ps, NmseVariant::kPower) /
                    Nmse(y, p, NmseVariant::kPower),
                1.0, 1e-12);
  }
}

TEST(NmseTest, UndefinedAndContractErrors) {
  const std::vector<double> constant(5, 2.0);
  const std::vector<double> zeros(5, 0.0);
  EXPECT_THROW(Nmse(constant, zeros), UndefinedMetricError);
  EXPECT_THROW(Nmse(zeros, constant, NmseVariant::kPower),
               UndefinedMetricError);
  EXPECT_NO_THROW(Nmse(constant, zeros, NmseVariant::kPower));
  EXPECT_THROW(Nmse(constant, std::vector<double>(4)), ContractError);
  EXPECT_THROW(Nmse(std::vector<double>{}, std::vector<double>{}),
               ContractError);
}

TEST(NmseTest, VariantNames) {
  EXPECT_EQ(ParseNmseVariant("variance"), NmseVariant::kVariance);
  EXPECT_EQ(ParseNmseVariant("power"), NmseVariant::kPower);
  EXPECT_FALSE(ParseNmseVariant("mse"));
  EXPECT_EQ(NmseVariantName(NmseVariant::kPower), "power");
}

RunTrace MakeTrace() {
  RunTrace trace;
  trace.series_name = "t";
  const double targets[] = {4, 1, 2, 3, 5, 6, 7, 8, 9};
  std::size_t size = 0;
  for (std::size_t i = 0; i < 9; ++i) {
    StepOutcome o;
    o.index = i;
    o.target = targets[i];
    o.prediction = i == 0 ? 0.0 : targets[i] + (i % 2 ? 0.5 : -0.5);
    o.error = o.target - o.prediction;
    o.cold_start = i == 0;
    o.degenerate_input = i == 4;
    if (o.degenerate_input) o.prediction = 0.0;
    o.centre_added = i == 0 || i == 3 || i == 7;
    size += o.centre_added;
    o.dict_size = size;
    trace.outcomes.push_back(o);
  }
  trace.weights = {0.5, -3.0, 1.0};
  return trace;
}

TEST(SummarizeTest, ScoresOnlyRealPredictions) {
  const RunReport report = Summarize(MakeTrace());
  EXPECT_EQ(report.scored_steps, 7u);
  EXPECT_EQ(report.final_dict_size, 3u);
  EXPECT_EQ(report.max_abs_weight, 3.0);
  const std::vector<double> y{1, 2, 3, 6, 7, 8, 9};
  std::vector<double> p;
  for (const StepOutcome& o : report.trace.outcomes) {
    if (o.scored()) p.push_back(o.prediction);
  }
  EXPECT_DOUBLE_EQ(report.nmse, Nmse(y, p));
  // Quarters of 7 scored steps hold one value each: undefined.
  EXPECT_FALSE(report.nmse_first_quarter);
}

TEST(SummarizeTest, GrowthCurveAndAdditions) {
  const RunTrace trace = MakeTrace();
  const auto curve = GrowthCurve(trace);
  ASSERT_EQ(curve.size(), 9u);
  EXPECT_EQ(curve[0], (GrowthPoint{0, 1}));
  EXPECT_EQ(curve[8], (GrowthPoint{8, 3}));
  for (std::size_t i = 1; i < curve.size(); ++i) {
    EXPECT_GE(curve[i].dict_size, curve[i - 1].dict_size);
    EXPECT_LE(curve[i].dict_size, curve[i - 1].dict_size + 1);
  }
  EXPECT_EQ(AdditionsFrom(trace, 0), 3u);
  EXPECT_EQ(AdditionsFrom(trace, 4), 1u);
  EXPECT_EQ(AdditionsFrom(trace, 8), 0u);
}

TEST(SummarizeTest, EmptyOrUnscoredTraces) {
  EXPECT_THROW(GrowthCurve(RunTrace{}), ContractError);
  RunTrace trace;
  StepOutcome o;
  o.cold_start = true;
  o.dict_size = 1;
  trace.outcomes.push_back(o);
  EXPECT_THROW(Summarize(trace), UndefinedMetricError);
}

}  // namespace
}  // namespace kaf

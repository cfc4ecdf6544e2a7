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

#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "kaf/errors.h"

namespace kaf {
namespace {

TEST(ParseSettingsTest, KeyValueLinesWithComments) {
  std::istringstream in(
      "# experiment\n"
      "data = data/co2.csv   # weekly\n"
      "\n"
      "  order=5\n"
      "mode = gaussian\n");
  const SettingsMap s = ParseSettings(in);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.at("data"), "data/co2.csv");
  EXPECT_EQ(s.at("order"), "5");
  EXPECT_EQ(s.at("mode"), "gaussian");
}

TEST(ParseSettingsTest, MalformedLine) {
  std::istringstream missing_eq("order 5\n");
  EXPECT_THROW(ParseSettings(missing_eq), ConfigError);
  std::istringstream empty_key("= 5\n");
  EXPECT_THROW(ParseSettings(empty_key), ConfigError);
}

TEST(BuildConfigTest, Defaults) {
  const ExperimentConfig c =
      BuildExperimentConfig({{"synthetic", "sine"}}, Verb::kRun);
  EXPECT_EQ(c.mode, KernelKind::kUnitNormGaussian);
  EXPECT_EQ(c.order, 10u);
  EXPECT_EQ(c.mu, 0.5);
  EXPECT_EQ(c.epsilon, 1e-4);
  EXPECT_EQ(c.unit_norm.l0, 2.0);
  EXPECT_EQ(c.unit_norm.delta_dict, 0.95);
  EXPECT_EQ(c.unit_norm.delta_pred, 0.05);
  EXPECT_EQ(c.baseline.delta_dict_factor, 1.0);
  EXPECT_TRUE(c.baseline.delta_pred_scaled_by_std);
  ASSERT_TRUE(c.synthetic);
  EXPECT_EQ(c.synthetic->period, 50.0);
  EXPECT_NO_THROW(c.Validate());
}

TEST(BuildConfigTest, RoutedKeysFollowRunMode) {
  const SettingsMap s{{"synthetic", "ramp"},
                      {"mode", "gaussian"},
                      {"lengthscale", "3"},
                      {"delta-dict", "0.7"}};
  const ExperimentConfig run = BuildExperimentConfig(s, Verb::kRun);
  EXPECT_EQ(run.baseline.lengthscale, 3.0);
  EXPECT_EQ(run.baseline.delta_dict, 0.7);
  EXPECT_FALSE(run.unit_norm.lengthscale);

  const ExperimentConfig compare = BuildExperimentConfig(s, Verb::kCompare);
  EXPECT_EQ(compare.unit_norm.lengthscale, 3.0);
  EXPECT_EQ(compare.unit_norm.delta_dict, 0.7);
  EXPECT_FALSE(compare.baseline.lengthscale);
}

TEST(BuildConfigTest, PrefixedKeysWin) {
  const ExperimentConfig c = BuildExperimentConfig(
      {{"synthetic", "sine"},
       {"delta-pred", "0.2"},
       {"unitnorm-delta-pred", "0.1"}},
      Verb::kRun);
  EXPECT_EQ(c.unit_norm.delta_pred, 0.1);
}

TEST(BuildConfigTest, Errors) {
  EXPECT_THROW(BuildExperimentConfig({{"bogus", "1"}}, Verb::kRun),
               ConfigError);
  EXPECT_THROW(BuildExperimentConfig({{"order", "-1"}}, Verb::kRun),
               ConfigError);
  EXPECT_THROW(BuildExperimentConfig({{"mu", "abc"}}, Verb::kRun),
               ConfigError);
  EXPECT_THROW(BuildExperimentConfig({{"mode", "laplace"}}, Verb::kRun),
               ConfigError);
  EXPECT_THROW(BuildExperimentConfig({{"nmse", "mae"}}, Verb::kRun),
               ConfigError);
  EXPECT_THROW(
      BuildExperimentConfig({{"synthetic", "sine"}, {"plain-lms", "true"}},
                            Verb::kRun),
      ConfigError);
  EXPECT_NO_THROW(
      BuildExperimentConfig({{"synthetic", "sine"}, {"plain-lms", "true"}},
                            Verb::kCompare));
}

TEST(ValidateTest, ExactlyOneSource) {
  ExperimentConfig none;
  EXPECT_THROW(none.Validate(), ConfigError);
  const ExperimentConfig both = BuildExperimentConfig(
      {{"synthetic", "sine"}, {"data", "x.csv"}}, Verb::kRun);
  EXPECT_THROW(both.Validate(), ConfigError);
  const ExperimentConfig zero_order = BuildExperimentConfig(
      {{"synthetic", "sine"}, {"order", "0"}}, Verb::kRun);
  EXPECT_THROW(zero_order.Validate(), ConfigError);
}

TEST(ToSettingsTest, RoundTrips) {
  const SettingsMap original{{"data", "data/sunspots.csv"},
                             {"column", "SUNACTIVITY"},
                             {"mode", "gaussian"},
                             {"order", "7"},
                             {"mu", "0.25"},
                             {"baseline-delta-dict", "1.5"},
                             {"baseline-delta-pred-scale", "absolute"},
                             {"truncate", "250"},
                             {"nmse", "power"},
                             {"max-dict-size", "40"},
                             {"seed", "9"}};
  const ExperimentConfig c = BuildExperimentConfig(original, Verb::kRun);
  const SettingsMap echoed = ToSettings(c);
  EXPECT_EQ(echoed.at("unitnorm-lengthscale"), "auto");
  EXPECT_EQ(echoed.at("baseline-delta-dict"), "1.5");
  const ExperimentConfig again = BuildExperimentConfig(echoed, Verb::kRun);
  EXPECT_EQ(ToSettings(again), echoed);
  EXPECT_EQ(again.order, 7u);
  EXPECT_EQ(again.truncate, 250u);
  EXPECT_EQ(again.nmse, NmseVariant::kPower);
  EXPECT_EQ(again.max_dictionary_size, 40u);
  EXPECT_FALSE(again.baseline.delta_pred_scaled_by_std);
}

}  // namespace
}  // namespace kaf

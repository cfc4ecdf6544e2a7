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

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "kaf/experiment.h"
#include "kaf/filter.h"
#include "kaf/kernels.h"
#include "kaf/timeseries.h"

namespace {

kaf::InputVector RandomInput(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> normal;
  std::vector<double> v(dim);
  for (double& x : v) x = normal(rng);
  return kaf::InputVector(std::move(v));
}

void BM_UnitNormKernel(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const kaf::InputVector a = RandomInput(rng, dim);
  const kaf::InputVector b = RandomInput(rng, dim);
  const kaf::KernelSpec spec = kaf::KernelSpec::UnitNormGaussian(2.0, dim);
  for (auto _ : state) benchmark::DoNotOptimize(spec.Evaluate(a, b));
}
BENCHMARK(BM_UnitNormKernel)->Arg(5)->Arg(10)->Arg(20);

// Per-step cost for a dictionary of state.range(0) centres.
void BM_FilterStep(benchmark::State& state, kaf::KernelKind kind) {
  const int dim = 10;
  const auto centres = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  kaf::FilterConfig config;
  config.kernel = kaf::KernelSpec::WithLengthscale(kind, 2.0, dim);
  config.novelty = kind == kaf::KernelKind::kUnitNormGaussian
                       ? kaf::NoveltyConfig{0.0, 0.05}
                       : kaf::NoveltyConfig{1e9, 0.05};
  kaf::KlmsFilter filter(config);
  for (int j = 0; j < centres; ++j) filter.SeedCentre(RandomInput(rng, dim), 0.1);
  std::vector<kaf::InputVector> inputs;
  for (int i = 0; i < 256; ++i) inputs.push_back(RandomInput(rng, dim));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(filter.Step(inputs[i++ % inputs.size()], 1.0));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK_CAPTURE(BM_FilterStep, gaussian, kaf::KernelKind::kGaussian)
    ->Arg(1)->Arg(16)->Arg(128);
BENCHMARK_CAPTURE(BM_FilterStep, unitnorm, kaf::KernelKind::kUnitNormGaussian)
    ->Arg(1)->Arg(16)->Arg(128);

void BM_LoadCo2(benchmark::State& state) {
  std::ifstream file(std::string(KAF_DATA_DIR) + "/co2.csv");
  std::stringstream text;
  text << file.rdbuf();
  const std::string csv = text.str();
  for (auto _ : state) {
    std::istringstream in(csv);
    benchmark::DoNotOptimize(kaf::LoadCsv(in, "co2"));
  }
  state.SetBytesProcessed(state.iterations() * csv.size());
}
BENCHMARK(BM_LoadCo2);

void BM_Co2Experiment(benchmark::State& state) {
  kaf::ExperimentConfig config;
  config.file = kaf::FileSource{std::string(KAF_DATA_DIR) + "/co2.csv", "co2"};
  config.mode = static_cast<kaf::KernelKind>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kaf::RunExperiment(config));
}
BENCHMARK(BM_Co2Experiment)
    ->Arg(static_cast<int>(kaf::KernelKind::kGaussian))
    ->Arg(static_cast<int>(kaf::KernelKind::kUnitNormGaussian))
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

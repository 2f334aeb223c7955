// Copyright 2026 The eegapprox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "eegapprox/approximation.hpp"
#include "eegapprox/bands.hpp"
#include "eegapprox/fft.hpp"
#include "eegapprox/features.hpp"
#include "eegapprox/pareto.hpp"
#include "eegapprox/signal_io.hpp"
#include "eegapprox/welch.hpp"

using namespace eegapprox;

namespace {

void BM_Fft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  std::vector<Complex> x(n);
  for (auto& v : x) v = {g(rng), g(rng)};
  for (auto _ : state) benchmark::DoNotOptimize(fft(x));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Fft)->RangeMultiplier(2)->Range(256, 2048);

void BM_WelchLevel(benchmark::State& state) {
  const Tone tones[] = {{10.0, 1.0}};
  const auto rec = synth_signal(tones, 60.0, 256.0, 0.5, 7);
  const auto cfg = level_to_config(static_cast<int>(state.range(0)));
  const auto& x = rec.channels()[0].samples;
  for (auto _ : state) benchmark::DoNotOptimize(welch_psd(x, cfg, 256.0));
}
BENCHMARK(BM_WelchLevel)->DenseRange(0, 5);

void BM_EpochFeatures(benchmark::State& state) {
  LabeledSynthSpec spec;
  spec.epochs = 4;
  spec.epoch_length_samples = 7680;
  const auto rec = synth_labeled(spec);
  const EpochSpec epoch{7680, 7680};
  const auto profile = builtin_profile(Application::seizure);
  const auto cfg = level_to_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(extract_epoch_features(rec, profile, cfg, epoch));
}
BENCHMARK(BM_EpochFeatures)->Arg(0)->Arg(5);

void BM_Pareto(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<SweepRecord> rs(static_cast<std::size_t>(state.range(0)));
  for (auto& r : rs) {
    r.platform = {Cluster::big, 4, 1400};
    r.power_w = u(rng);
    r.perf_hb_s = u(rng);
    r.accuracy = u(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(pareto_indices(rs));
}
BENCHMARK(BM_Pareto)->Arg(144)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();

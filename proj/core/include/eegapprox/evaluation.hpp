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

#pragma once

#include <cstdint>
#include <span>

#include "eegapprox/approximation.hpp"
#include "eegapprox/bands.hpp"
#include "eegapprox/features.hpp"
#include "eegapprox/signal_io.hpp"

namespace eegapprox {

class Classifier;

struct ConfusionCounts {
  std::uint64_t tp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;

  std::uint64_t total() const noexcept { return tp + tn + fp + fn; }
  bool operator==(const ConfusionCounts&) const = default;
};

// Binary confusion; every entry must be 0 or 1.
ConfusionCounts confusion(std::span<const int> predicted,
                          std::span<const int> truth);

// (TP + TN) / (TP + TN + FP + FN).
double accuracy(const ConfusionCounts& c);

// Mean over dimensions of |a - b| / max(|b|, 1e-12).
double feature_deviation(const FeatureVector& a, const FeatureVector& b);

enum class TruthSource {
  baseline_predictions,  // classify under the baseline config, call it truth
  dataset_labels,        // use the record's per-epoch labels
};

struct AccuracyOptions {
  EpochSpec epoch;
  TruthSource truth = TruthSource::baseline_predictions;
  // Multi-class labels are reduced one-vs-rest against this label.
  int positive_label = 1;
};

// Classifies every epoch under `approx` and scores the predictions against
// the chosen truth.
double approximation_accuracy(const EegRecord& rec, const BandProfile& profile,
                              const Classifier& clf, const ApproxConfig& approx,
                              const ApproxConfig& baseline,
                              const AccuracyOptions& options);

// Same, returning the full confusion counts.
ConfusionCounts approximation_confusion(const EegRecord& rec,
                                        const BandProfile& profile,
                                        const Classifier& clf,
                                        const ApproxConfig& approx,
                                        const ApproxConfig& baseline,
                                        const AccuracyOptions& options);

}  // namespace eegapprox

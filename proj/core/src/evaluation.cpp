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

#include "eegapprox/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eegapprox/classifier.hpp"
#include "eegapprox/errors.hpp"

namespace eegapprox {

ConfusionCounts confusion(std::span<const int> predicted,
                          std::span<const int> truth) {
  if (predicted.size() != truth.size()) {
    throw DomainError("prediction and truth lengths differ");
  }
  if (predicted.empty()) throw DomainError("confusion of an empty sequence");
  ConfusionCounts c;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const int p = predicted[i];
    const int t = truth[i];
    if ((p != 0 && p != 1) || (t != 0 && t != 1)) {
      throw DomainError("confusion labels must be 0 or 1");
    }
    if (p == 1 && t == 1) ++c.tp;
    else if (p == 0 && t == 0) ++c.tn;
    else if (p == 1) ++c.fp;
    else ++c.fn;
  }
  return c;
}

double accuracy(const ConfusionCounts& c) {
  const auto total = c.total();
  if (total == 0) throw DomainError("accuracy of zero samples");
  return static_cast<double>(c.tp + c.tn) / static_cast<double>(total);
}

double feature_deviation(const FeatureVector& a, const FeatureVector& b) {
  if (a.dimension() != b.dimension()) {
    throw DomainError("feature dimensions differ");
  }
  if (a.dimension() == 0) return 0.0;
  constexpr double kEps = 1e-12;
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    sum += std::abs(a.values[i] - b.values[i]) /
           std::max(std::abs(b.values[i]), kEps);
  }
  return sum / static_cast<double>(a.dimension());
}

ConfusionCounts approximation_confusion(const EegRecord& rec,
                                        const BandProfile& profile,
                                        const Classifier& clf,
                                        const ApproxConfig& approx,
                                        const ApproxConfig& baseline,
                                        const AccuracyOptions& options) {
  const auto approx_features =
      extract_epoch_features(rec, profile, approx, options.epoch);
  if (approx_features.empty()) {
    throw InsufficientDataError("record holds no complete epoch");
  }
  auto binarize = [&](int label) {
    return label == options.positive_label ? 1 : 0;
  };

  std::vector<int> predicted;
  predicted.reserve(approx_features.size());
  for (std::size_t e = 0; e < approx_features.size(); ++e) {
    predicted.push_back(binarize(clf.predict(approx_features[e], e)));
  }

  std::vector<int> truth;
  truth.reserve(predicted.size());
  if (options.truth == TruthSource::dataset_labels) {
    if (!rec.labels()) throw DomainError("record carries no labels");
    if (options.epoch.stride_samples != options.epoch.epoch_length_samples ||
        options.epoch.epoch_length_samples != rec.label_epoch_length()) {
      throw DomainError(
          "label truth needs non-overlapping epochs of the labeled length");
    }
    const auto& labels = *rec.labels();
    for (std::size_t e = 0; e < predicted.size(); ++e) {
      truth.push_back(binarize(labels.at(e)));
    }
  } else if (approx == baseline) {
    truth = predicted;
  } else {
    const auto base_features =
        extract_epoch_features(rec, profile, baseline, options.epoch);
    if (base_features.size() != approx_features.size()) {
      throw DomainError("baseline and approximate epoch counts differ");
    }
    for (std::size_t e = 0; e < base_features.size(); ++e) {
      truth.push_back(binarize(clf.predict(base_features[e], e)));
    }
  }
  return confusion(predicted, truth);
}

double approximation_accuracy(const EegRecord& rec, const BandProfile& profile,
                              const Classifier& clf, const ApproxConfig& approx,
                              const ApproxConfig& baseline,
                              const AccuracyOptions& options) {
  return accuracy(
      approximation_confusion(rec, profile, clf, approx, baseline, options));
}

}  // namespace eegapprox

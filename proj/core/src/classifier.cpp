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

#include "eegapprox/classifier.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <string>

#include "eegapprox/errors.hpp"

namespace eegapprox {

NearestCentroid::NearestCentroid(std::vector<int> labels,
                                 std::vector<std::vector<double>> centroids,
                                 std::vector<double> scale)
    : labels_(std::move(labels)),
      centroids_(std::move(centroids)),
      scale_(std::move(scale)) {
  if (labels_.size() < 2) throw DomainError("classifier needs >= 2 classes");
  if (labels_.size() != centroids_.size()) {
    throw DomainError("one centroid per label required");
  }
  if (!std::is_sorted(labels_.begin(), labels_.end()) ||
      std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw DomainError("labels must be strictly ascending");
  }
  for (const auto& c : centroids_) {
    if (c.size() != scale_.size()) {
      throw DomainError("centroid dimensionality differs from scale");
    }
  }
  for (double s : scale_) {
    if (!(s > 0.0)) throw DomainError("scale entries must be positive");
  }
}

int NearestCentroid::classify(std::span<const double> features) const {
  if (features.size() != scale_.size()) {
    throw DomainError("feature dimension " + std::to_string(features.size()) +
                      " does not match classifier dimension " +
                      std::to_string(scale_.size()));
  }
  double best = std::numeric_limits<double>::infinity();
  int best_label = labels_.front();
  for (std::size_t c = 0; c < centroids_.size(); ++c) {
    double d2 = 0.0;
    for (std::size_t i = 0; i < features.size(); ++i) {
      const double z = (features[i] - centroids_[c][i]) / scale_[i];
      d2 += z * z;
    }
    // Strict comparison keeps the first (smallest) label on ties.
    if (d2 < best) {
      best = d2;
      best_label = labels_[c];
    }
  }
  return best_label;
}

int classify(const NearestCentroid& clf, const FeatureVector& f) {
  return clf.classify(f.values);
}

NearestCentroid train_nearest_centroid(std::span<const FeatureVector> features,
                                       std::span<const int> labels) {
  if (features.size() != labels.size()) {
    throw DomainError("feature and label counts differ");
  }
  if (features.empty()) throw DomainError("no training samples");
  const std::size_t dim = features.front().dimension();
  for (const auto& f : features) {
    if (f.dimension() != dim) throw DomainError("inconsistent feature dimension");
  }

  std::map<int, std::pair<std::vector<double>, std::size_t>> sums;
  std::vector<double> mean(dim, 0.0);
  for (std::size_t s = 0; s < features.size(); ++s) {
    auto& [sum, count] = sums[labels[s]];
    if (sum.empty()) sum.assign(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      sum[i] += features[s].values[i];
      mean[i] += features[s].values[i];
    }
    ++count;
  }
  if (sums.size() < 2) {
    throw DomainError("training set must contain at least two classes");
  }

  const double n = static_cast<double>(features.size());
  for (auto& m : mean) m /= n;
  std::vector<double> scale(dim, 0.0);
  for (const auto& f : features) {
    for (std::size_t i = 0; i < dim; ++i) {
      const double d = f.values[i] - mean[i];
      scale[i] += d * d;
    }
  }
  for (auto& s : scale) {
    s = std::sqrt(s / n);
    if (!(s > 0.0)) s = 1.0;
  }

  std::vector<int> class_labels;
  std::vector<std::vector<double>> centroids;
  for (auto& [label, entry] : sums) {
    auto& [sum, count] = entry;
    for (auto& v : sum) v /= static_cast<double>(count);
    class_labels.push_back(label);
    centroids.push_back(std::move(sum));
  }
  return NearestCentroid(std::move(class_labels), std::move(centroids),
                         std::move(scale));
}

ExternalPredictions::ExternalPredictions(std::vector<int> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) throw EmptyInputError("no external predictions");
}

int ExternalPredictions::predict(const FeatureVector&,
                                 std::size_t epoch_index) const {
  if (epoch_index >= labels_.size()) {
    throw DomainError("no external prediction for epoch " +
                      std::to_string(epoch_index));
  }
  return labels_[epoch_index];
}

ExternalPredictions load_external_predictions(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LookupError("cannot open predictions " + path.string());
  std::vector<int> labels;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty()) continue;
    int v = 0;
    const auto* end = line.data() + line.size();
    const auto [ptr, ec] = std::from_chars(line.data(), end, v);
    if (ec != std::errc() || ptr != end) {
      throw ParseError("cannot parse prediction '" + line + "' at row " +
                           std::to_string(row) + ", column 1",
                       row, 1);
    }
    labels.push_back(v);
  }
  return ExternalPredictions(std::move(labels));
}

}  // namespace eegapprox

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

#include <filesystem>
#include <memory>
#include <span>
#include <vector>

#include "eegapprox/features.hpp"

namespace eegapprox {

enum class ClassifierKind { nearest_centroid, external };

// Maps one epoch's features to an integer label. `epoch_index` lets
// precomputed-prediction classifiers look up their answer.
class Classifier {
 public:
  virtual ~Classifier() = default;

  virtual ClassifierKind kind() const noexcept = 0;
  virtual int predict(const FeatureVector& f, std::size_t epoch_index) const = 0;
};

class NearestCentroid final : public Classifier {
 public:
  NearestCentroid(std::vector<int> labels,
                  std::vector<std::vector<double>> centroids,
                  std::vector<double> scale);

  ClassifierKind kind() const noexcept override {
    return ClassifierKind::nearest_centroid;
  }
  int predict(const FeatureVector& f, std::size_t) const override {
    return classify(f.values);
  }

  // Label of the nearest centroid under scale-normalized Euclidean distance;
  // ties go to the smallest label.
  int classify(std::span<const double> features) const;

  std::size_t dimension() const noexcept { return scale_.size(); }
  const std::vector<int>& labels() const noexcept { return labels_; }
  const std::vector<std::vector<double>>& centroids() const noexcept {
    return centroids_;
  }
  const std::vector<double>& scale() const noexcept { return scale_; }

 private:
  std::vector<int> labels_;  // ascending
  std::vector<std::vector<double>> centroids_;
  std::vector<double> scale_;
};

// Centroid = per-class mean; scale = global per-dimension population standard
// deviation, with zero-variance dimensions scaled by 1.
NearestCentroid train_nearest_centroid(std::span<const FeatureVector> features,
                                       std::span<const int> labels);

int classify(const NearestCentroid& clf, const FeatureVector& f);

// Labels computed elsewhere, one per epoch.
class ExternalPredictions final : public Classifier {
 public:
  explicit ExternalPredictions(std::vector<int> labels);

  ClassifierKind kind() const noexcept override {
    return ClassifierKind::external;
  }
  int predict(const FeatureVector& f, std::size_t epoch_index) const override;

  std::size_t size() const noexcept { return labels_.size(); }

 private:
  std::vector<int> labels_;
};

// One integer per line.
ExternalPredictions load_external_predictions(
    const std::filesystem::path& path);

}  // namespace eegapprox

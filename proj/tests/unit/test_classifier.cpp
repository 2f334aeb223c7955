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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "eegapprox/classifier.hpp"
#include "eegapprox/errors.hpp"
#include "eegapprox/evaluation.hpp"

using namespace eegapprox;

namespace {

FeatureVector fv(std::vector<double> v) { return FeatureVector{{"x"}, std::move(v)}; }

}  // namespace

TEST(TrainNearestCentroid, TwoPointsBecomeCentroids) {
  const std::vector<FeatureVector> f{fv({0, 0}), fv({2, 2})};
  const std::vector<int> labels{0, 1};
  const auto clf = train_nearest_centroid(f, labels);
  EXPECT_EQ(clf.labels(), (std::vector<int>{0, 1}));
  EXPECT_EQ(clf.centroids()[0], (std::vector<double>{0, 0}));
  EXPECT_EQ(clf.centroids()[1], (std::vector<double>{2, 2}));
}

TEST(TrainNearestCentroid, ConstantDimensionGetsUnitScale) {
  const std::vector<FeatureVector> f{fv({0, 5}), fv({2, 5}), fv({1, 5})};
  const std::vector<int> labels{0, 1, 1};
  const auto clf = train_nearest_centroid(f, labels);
  EXPECT_EQ(clf.scale()[1], 1.0);
  EXPECT_GT(clf.scale()[0], 0.0);
  EXPECT_EQ(classify(clf, fv({0.1, 5})), 0);
}

TEST(TrainNearestCentroid, Errors) {
  const std::vector<FeatureVector> f{fv({0, 0}), fv({1, 1})};
  EXPECT_THROW(train_nearest_centroid(f, std::vector<int>{0, 0}), DomainError);
  EXPECT_THROW(train_nearest_centroid(f, std::vector<int>{0}), DomainError);
  const std::vector<FeatureVector> ragged{fv({0, 0}), fv({1})};
  EXPECT_THROW(train_nearest_centroid(ragged, std::vector<int>{0, 1}), DomainError);
}

TEST(Classify, CentroidMapsToItsLabel) {
  const std::vector<FeatureVector> f{fv({0, 0}), fv({2, 2}), fv({10, -3})};
  const std::vector<int> labels{3, 7, 9};
  const auto clf = train_nearest_centroid(f, labels);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(classify(clf, f[i]), labels[i]);
}

TEST(Classify, TieGoesToSmallestLabel) {
  const std::vector<FeatureVector> f{fv({2, 2}), fv({0, 0})};
  const std::vector<int> labels{1, 0};
  const auto clf = train_nearest_centroid(f, labels);
  EXPECT_EQ(classify(clf, fv({1, 1})), 0);
}

TEST(Classify, DimensionMismatch) {
  const std::vector<FeatureVector> f{fv({0, 0}), fv({2, 2})};
  const auto clf = train_nearest_centroid(f, std::vector<int>{0, 1});
  EXPECT_THROW(classify(clf, fv({1})), DomainError);
}

TEST(ClassifyProperty, TranslationAndScalingInvariance) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-5, 5);
  std::uniform_real_distribution<double> pos(0.1, 10);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::vector<double>> centroids(3, std::vector<double>(4));
    std::vector<double> scale(4), q(4), shift(4);
    for (auto& c : centroids) for (auto& v : c) v = u(rng);
    for (auto& s : scale) s = pos(rng);
    for (auto& v : q) v = u(rng);
    for (auto& v : shift) v = u(rng);
    const NearestCentroid base({0, 1, 2}, centroids, scale);
    const int expected = base.classify(q);

    auto moved = centroids;
    auto mq = q;
    for (auto& c : moved) for (std::size_t i = 0; i < 4; ++i) c[i] += shift[i];
    for (std::size_t i = 0; i < 4; ++i) mq[i] += shift[i];
    EXPECT_EQ(NearestCentroid({0, 1, 2}, moved, scale).classify(mq), expected);

    const double k = pos(rng);
    auto scaled = centroids;
    auto sq = q;
    for (auto& c : scaled) for (auto& v : c) v *= k;
    for (auto& v : sq) v *= k;
    EXPECT_EQ(NearestCentroid({0, 1, 2}, scaled, scale).classify(sq), expected);
  }
}

TEST(Classify, SeparatesTwoGaussianClassesFromSynthesizedEpochs) {
  LabeledSynthSpec spec;
  spec.epochs = 200;
  spec.epoch_length_samples = 1024;
  spec.seed = 2025;
  const auto rec = synth_labeled(spec);
  const auto feats = extract_epoch_features(rec, builtin_profile(Application::seizure),
                                            level_to_config(0), EpochSpec{1024, 1024});
  const auto& labels = *rec.labels();
  const std::span<const FeatureVector> all(feats);
  const std::span<const int> all_labels(labels);
  const auto clf = train_nearest_centroid(all.first(100), all_labels.first(100));
  std::vector<int> pred;
  for (std::size_t i = 100; i < 200; ++i) pred.push_back(classify(clf, feats[i]));
  const double acc = accuracy(confusion(pred, all_labels.subspan(100)));
  EXPECT_GE(acc, 0.95);
}

TEST(ExternalPredictions, LooksUpByEpoch) {
  const ExternalPredictions ext({0, 1, 1});
  EXPECT_EQ(ext.kind(), ClassifierKind::external);
  EXPECT_EQ(ext.predict(fv({}), 1), 1);
  EXPECT_THROW(ext.predict(fv({}), 3), DomainError);
  EXPECT_THROW(ExternalPredictions({}), EmptyInputError);
}

TEST(ExternalPredictions, LoadsOnePerLine) {
  const auto path = std::filesystem::temp_directory_path() / "eegapprox_pred.txt";
  {
    std::ofstream(path) << "0\n1\n\n1\n";
  }
  EXPECT_EQ(load_external_predictions(path).size(), 3u);
  {
    std::ofstream(path) << "0\nx\n";
  }
  EXPECT_THROW(load_external_predictions(path), ParseError);
  std::filesystem::remove(path);
}

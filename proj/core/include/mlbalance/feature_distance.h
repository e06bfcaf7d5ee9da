// Copyright 2026 The mlbalance Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MLBALANCE_FEATURE_DISTANCE_H_
#define MLBALANCE_FEATURE_DISTANCE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mlbalance/dataset.h"

namespace mlbalance {

// Heterogeneous Euclidean distance over feature vectors. Per feature:
//   numeric  ((a - b) / range)^2 with range = max - min over the reference
//            dataset (a constant feature contributes 0),
//   nominal  0 when equal, 1 otherwise,
//   missing  1 when either side is missing.
class FeatureMetric {
 public:
  explicit FeatureMetric(const MultiLabelDataset& reference);

  double squared_distance(std::span<const FeatureValue> a,
                          std::span<const FeatureValue> b) const;
  double distance(std::span<const FeatureValue> a,
                  std::span<const FeatureValue> b) const;

 private:
  std::vector<bool> nominal_;
  std::vector<double> inverse_range_;
};

// The `count` candidates nearest to `query`, nearest first. Ties go to the
// lower instance index; `exclude` is never returned. Returns fewer than
// `count` indices when there are not enough candidates.
std::vector<std::size_t> nearest_neighbors(
    const FeatureMetric& metric, const MultiLabelDataset& dataset,
    std::span<const FeatureValue> query, std::span<const std::size_t> candidates,
    std::size_t count, std::optional<std::size_t> exclude = std::nullopt);

// Same, with every instance of `dataset` as a candidate.
std::vector<std::size_t> nearest_neighbors(
    const FeatureMetric& metric, const MultiLabelDataset& dataset,
    std::span<const FeatureValue> query, std::size_t count,
    std::optional<std::size_t> exclude = std::nullopt);

}  // namespace mlbalance

#endif  // MLBALANCE_FEATURE_DISTANCE_H_

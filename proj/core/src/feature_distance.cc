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

#include "mlbalance/feature_distance.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

namespace mlbalance {

FeatureMetric::FeatureMetric(const MultiLabelDataset& reference) {
  const std::size_t m = reference.num_features();
  nominal_.resize(m);
  inverse_range_.assign(m, 0.0);
  for (std::size_t f = 0; f < m; ++f) {
    nominal_[f] = reference.attributes()[f].is_nominal();
    if (nominal_[f]) continue;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const Instance& inst : reference.instances()) {
      const FeatureValue& v = inst.features[f];
      if (!v.is_numeric()) continue;
      lo = std::min(lo, v.as_numeric());
      hi = std::max(hi, v.as_numeric());
    }
    const double range = hi - lo;
    if (std::isfinite(range) && range > 0.0) inverse_range_[f] = 1.0 / range;
  }
}

double FeatureMetric::squared_distance(std::span<const FeatureValue> a,
                                       std::span<const FeatureValue> b) const {
  double total = 0.0;
  for (std::size_t f = 0; f < nominal_.size(); ++f) {
    const FeatureValue& x = a[f];
    const FeatureValue& y = b[f];
    if (x.is_missing() || y.is_missing()) {
      total += 1.0;
    } else if (nominal_[f]) {
      total += x.as_nominal() == y.as_nominal() ? 0.0 : 1.0;
    } else {
      const double d = (x.as_numeric() - y.as_numeric()) * inverse_range_[f];
      total += d * d;
    }
  }
  return total;
}

double FeatureMetric::distance(std::span<const FeatureValue> a,
                               std::span<const FeatureValue> b) const {
  return std::sqrt(squared_distance(a, b));
}

std::vector<std::size_t> nearest_neighbors(
    const FeatureMetric& metric, const MultiLabelDataset& dataset,
    std::span<const FeatureValue> query, std::span<const std::size_t> candidates,
    std::size_t count, std::optional<std::size_t> exclude) {
  std::vector<std::pair<double, std::size_t>> scored;
  scored.reserve(candidates.size());
  for (std::size_t c : candidates) {
    if (exclude && c == *exclude) continue;
    scored.emplace_back(
        metric.squared_distance(query, dataset.instance(c).features), c);
  }
  const std::size_t take = std::min(count, scored.size());
  // pair ordering: distance, then index.
  std::partial_sort(scored.begin(), scored.begin() + take, scored.end());
  std::vector<std::size_t> out;
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) out.push_back(scored[i].second);
  return out;
}

std::vector<std::size_t> nearest_neighbors(
    const FeatureMetric& metric, const MultiLabelDataset& dataset,
    std::span<const FeatureValue> query, std::size_t count,
    std::optional<std::size_t> exclude) {
  std::vector<std::size_t> all(dataset.num_instances());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return nearest_neighbors(metric, dataset, query, all, count, exclude);
}

}  // namespace mlbalance

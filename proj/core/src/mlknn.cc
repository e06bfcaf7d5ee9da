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

#include "mlbalance/mlknn.h"

#include <cmath>

#include "mlbalance/error.h"
#include "mlbalance/imbalance.h"

namespace mlbalance {

MlknnModel::MlknnModel(MultiLabelDataset train, MlknnOptions options)
    : train_(std::move(train)), options_(options), metric_(train_) {}

MlknnModel MlknnModel::train(const MultiLabelDataset& train,
                             const MlknnOptions& options) {
  const std::size_t n = train.num_instances();
  const std::size_t k_nn = options.neighbors;
  if (k_nn == 0 || k_nn >= n) {
    throw InvalidParameterError("ML-kNN needs 1 <= k < n_train, got k=" +
                                std::to_string(k_nn) +
                                ", n=" + std::to_string(n));
  }
  if (!(options.smoothing >= 0.0) || !std::isfinite(options.smoothing)) {
    throw InvalidParameterError("ML-kNN smoothing must be non-negative");
  }
  MlknnModel model(train, options);
  const std::size_t k = train.num_labels();
  const double s = options.smoothing;

  const std::vector<std::size_t> counts = label_counts(train);
  model.prior_.resize(k);
  for (std::size_t l = 0; l < k; ++l) {
    model.prior_[l] = (s + static_cast<double>(counts[l])) /
                      (2.0 * s + static_cast<double>(n));
  }

  std::vector<std::vector<std::size_t>> with(k,
                                             std::vector<std::size_t>(k_nn + 1));
  std::vector<std::vector<std::size_t>> without(
      k, std::vector<std::size_t>(k_nn + 1));
  std::vector<std::size_t> carriers(k);
  for (std::size_t i = 0; i < n; ++i) {
    const Instance& inst = train.instance(i);
    std::fill(carriers.begin(), carriers.end(), 0);
    for (std::size_t j :
         nearest_neighbors(model.metric_, model.train_, inst.features, k_nn, i)) {
      for (std::size_t l : model.train_.instance(j).labels.indices()) {
        ++carriers[l];
      }
    }
    for (std::size_t l = 0; l < k; ++l) {
      (inst.labels.contains(l) ? with : without)[l][carriers[l]]++;
    }
  }

  auto smooth = [&](const std::vector<std::size_t>& table) {
    double total = 0.0;
    for (std::size_t c : table) total += static_cast<double>(c);
    const double denom = s * static_cast<double>(k_nn + 1) + total;
    std::vector<double> out(table.size(), 0.0);
    if (denom <= 0.0) return out;
    for (std::size_t j = 0; j < table.size(); ++j) {
      out[j] = (s + static_cast<double>(table[j])) / denom;
    }
    return out;
  };
  model.likelihood_with_.resize(k);
  model.likelihood_without_.resize(k);
  for (std::size_t l = 0; l < k; ++l) {
    model.likelihood_with_[l] = smooth(with[l]);
    model.likelihood_without_[l] = smooth(without[l]);
  }
  return model;
}

double MlknnModel::posterior(std::size_t label, std::size_t carriers) const {
  const double yes = prior_[label] * likelihood_with_[label][carriers];
  const double no = (1.0 - prior_[label]) * likelihood_without_[label][carriers];
  const double total = yes + no;
  return total > 0.0 ? yes / total : 0.0;
}

PredictionSet MlknnModel::predict(const MultiLabelDataset& test) const {
  if (!(test.schema() == train_.schema())) {
    throw InvalidParameterError(
        "test set attributes or labels differ from the training set");
  }
  const std::size_t k = train_.num_labels();
  std::vector<double> scores;
  scores.reserve(test.num_instances() * k);
  std::vector<Labelset> predicted;
  predicted.reserve(test.num_instances());
  std::vector<std::size_t> carriers(k);
  for (const Instance& inst : test.instances()) {
    std::fill(carriers.begin(), carriers.end(), 0);
    for (std::size_t j : nearest_neighbors(metric_, train_, inst.features,
                                           options_.neighbors)) {
      for (std::size_t l : train_.instance(j).labels.indices()) ++carriers[l];
    }
    Labelset z(k);
    for (std::size_t l = 0; l < k; ++l) {
      const double score = posterior(l, carriers[l]);
      scores.push_back(score);
      if (score > 0.5) z.set(l);
    }
    predicted.push_back(std::move(z));
  }
  return PredictionSet(k, std::move(scores), std::move(predicted));
}

MlknnModel mlknn_train(const MultiLabelDataset& train,
                       const MlknnOptions& options) {
  return MlknnModel::train(train, options);
}

PredictionSet mlknn_predict(const MlknnModel& model,
                            const MultiLabelDataset& test) {
  return model.predict(test);
}

}  // namespace mlbalance

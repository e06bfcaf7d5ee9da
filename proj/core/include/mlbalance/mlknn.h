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

#ifndef MLBALANCE_MLKNN_H_
#define MLBALANCE_MLKNN_H_

#include <cstddef>
#include <vector>

#include "mlbalance/dataset.h"
#include "mlbalance/evaluation.h"
#include "mlbalance/feature_distance.h"

namespace mlbalance {

struct MlknnOptions {
  std::size_t neighbors = 10;
  double smoothing = 1.0;
};

// Multilabel k-nearest-neighbor classifier in its standard Bayesian form.
//
// Training stores, per label l, the smoothed prior
//   P(H_l) = (s + count_l) / (2s + n)
// and the likelihoods P(E_j | H_l), P(E_j | not H_l) of exactly j of an
// instance's k nearest training neighbors (itself excluded) carrying l,
//   (s + c[j]) / (s (k + 1) + sum_p c[p]).
// Prediction scores label l with the posterior P(H_l | E_C), C being the
// neighbor count carrying l, and predicts l when the score exceeds 0.5.
// Neighbors use FeatureMetric fitted on the training set; distance ties go
// to the lower training index.
class MlknnModel {
 public:
  // Throws InvalidParameterError unless 1 <= neighbors < n and smoothing >= 0.
  static MlknnModel train(const MultiLabelDataset& train,
                          const MlknnOptions& options = {});

  // Throws InvalidParameterError when the test schema differs from training.
  PredictionSet predict(const MultiLabelDataset& test) const;

  double prior(std::size_t label) const { return prior_[label]; }
  const MlknnOptions& options() const { return options_; }

 private:
  MlknnModel(MultiLabelDataset train, MlknnOptions options);

  double posterior(std::size_t label, std::size_t carriers) const;

  MultiLabelDataset train_;
  MlknnOptions options_;
  FeatureMetric metric_;
  std::vector<double> prior_;
  // [label][j], j = 0..neighbors
  std::vector<std::vector<double>> likelihood_with_;
  std::vector<std::vector<double>> likelihood_without_;
};

MlknnModel mlknn_train(const MultiLabelDataset& train,
                       const MlknnOptions& options = {});
PredictionSet mlknn_predict(const MlknnModel& model,
                            const MultiLabelDataset& test);

}  // namespace mlbalance

#endif  // MLBALANCE_MLKNN_H_

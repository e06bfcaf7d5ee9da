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

#ifndef MLBALANCE_EVALUATION_H_
#define MLBALANCE_EVALUATION_H_

#include <cstddef>
#include <span>
#include <vector>

#include "mlbalance/dataset.h"

namespace mlbalance {

// Classifier output for a test set: a confidence score per (instance, label),
// higher meaning more relevant, plus the thresholded labelsets Z_i.
class PredictionSet {
 public:
  PredictionSet(std::size_t num_labels, std::vector<double> scores,
                std::vector<Labelset> bipartition);

  std::size_t size() const { return bipartition_.size(); }
  std::size_t num_labels() const { return num_labels_; }
  std::span<const double> scores(std::size_t instance) const {
    return std::span<const double>(scores_).subspan(instance * num_labels_,
                                                    num_labels_);
  }
  const Labelset& predicted(std::size_t instance) const {
    return bipartition_[instance];
  }
  std::span<const Labelset> bipartition() const { return bipartition_; }

 private:
  std::size_t num_labels_;
  std::vector<double> scores_;  // row-major, size() x num_labels()
  std::vector<Labelset> bipartition_;
};

// Ground-truth labelsets Y_i of a dataset, in row order.
std::vector<Labelset> truth_of(const MultiLabelDataset& dataset);

// (1/n)(1/k) sum |Y_i xor Z_i|.
double hamming_loss(std::span<const Labelset> truth, const PredictionSet& pred);

// Example-based precision, recall and F-measure. An instance with |Z_i| = 0
// adds 0 to the precision mean, one with |Y_i| = 0 adds 0 to the recall mean;
// both still count in n. F is 2PR/(P+R), or 0 when P + R = 0.
struct ExampleBasedScores {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
  std::size_t empty_predictions = 0;
  std::size_t empty_truths = 0;
};
ExampleBasedScores example_based_scores(std::span<const Labelset> truth,
                                        const PredictionSet& pred);
double precision(std::span<const Labelset> truth, const PredictionSet& pred);
double recall(std::span<const Labelset> truth, const PredictionSet& pred);
double f_measure(std::span<const Labelset> truth, const PredictionSet& pred);

// Mean over instances with both relevant and irrelevant labels of the
// fraction of (relevant a, irrelevant b) pairs with score(b) > score(a).
// 0 when no instance qualifies.
double ranking_loss(std::span<const Labelset> truth, const PredictionSet& pred);

// Fraction of (positive, negative) label assignments across the whole test
// set with score(positive) >= score(negative). The comparator is >=, so a
// constant scorer gets 1. 1 when either set is empty.
double micro_auc(std::span<const Labelset> truth, const PredictionSet& pred);

struct EvaluationReport {
  std::size_t instances = 0;
  double hamming_loss = 0.0;
  double ranking_loss = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
  double auc = 0.0;
  std::size_t empty_predictions = 0;
  std::size_t empty_truths = 0;
};

EvaluationReport evaluate(std::span<const Labelset> truth,
                          const PredictionSet& pred);

}  // namespace mlbalance

#endif  // MLBALANCE_EVALUATION_H_

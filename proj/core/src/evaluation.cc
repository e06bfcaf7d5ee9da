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

#include "mlbalance/evaluation.h"

#include <algorithm>

#include "mlbalance/error.h"

namespace mlbalance {
namespace {

void check_shapes(std::span<const Labelset> truth, const PredictionSet& pred) {
  if (truth.size() != pred.size()) {
    throw InvalidParameterError("prediction set has " +
                                std::to_string(pred.size()) +
                                " rows, ground truth has " +
                                std::to_string(truth.size()));
  }
  if (truth.empty()) {
    throw InvalidParameterError("cannot evaluate an empty test set");
  }
  for (const Labelset& y : truth) {
    if (y.num_labels() != pred.num_labels()) {
      throw InvalidParameterError("label count mismatch between truth and "
                                  "predictions");
    }
  }
}

}  // namespace

PredictionSet::PredictionSet(std::size_t num_labels, std::vector<double> scores,
                             std::vector<Labelset> bipartition)
    : num_labels_(num_labels),
      scores_(std::move(scores)),
      bipartition_(std::move(bipartition)) {
  if (scores_.size() != bipartition_.size() * num_labels_) {
    throw InvalidParameterError("score matrix does not match bipartition size");
  }
  for (const Labelset& z : bipartition_) {
    if (z.num_labels() != num_labels_) {
      throw InvalidParameterError("bipartition labelset has wrong label count");
    }
  }
}

std::vector<Labelset> truth_of(const MultiLabelDataset& dataset) {
  std::vector<Labelset> out;
  out.reserve(dataset.num_instances());
  for (const Instance& inst : dataset.instances()) out.push_back(inst.labels);
  return out;
}

double hamming_loss(std::span<const Labelset> truth, const PredictionSet& pred) {
  check_shapes(truth, pred);
  std::size_t mistakes = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    mistakes += truth[i].symmetric_difference_count(pred.predicted(i));
  }
  return static_cast<double>(mistakes) /
         (static_cast<double>(truth.size()) *
          static_cast<double>(pred.num_labels()));
}

ExampleBasedScores example_based_scores(std::span<const Labelset> truth,
                                        const PredictionSet& pred) {
  check_shapes(truth, pred);
  ExampleBasedScores out;
  double precision_sum = 0.0;
  double recall_sum = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const Labelset& y = truth[i];
    const Labelset& z = pred.predicted(i);
    const double hits = static_cast<double>(y.intersection_count(z));
    const std::size_t predicted = z.count();
    const std::size_t relevant = y.count();
    if (predicted == 0) {
      ++out.empty_predictions;
    } else {
      precision_sum += hits / static_cast<double>(predicted);
    }
    if (relevant == 0) {
      ++out.empty_truths;
    } else {
      recall_sum += hits / static_cast<double>(relevant);
    }
  }
  const double n = static_cast<double>(truth.size());
  out.precision = precision_sum / n;
  out.recall = recall_sum / n;
  const double sum = out.precision + out.recall;
  out.f_measure = sum > 0.0 ? 2.0 * out.precision * out.recall / sum : 0.0;
  return out;
}

double precision(std::span<const Labelset> truth, const PredictionSet& pred) {
  return example_based_scores(truth, pred).precision;
}

double recall(std::span<const Labelset> truth, const PredictionSet& pred) {
  return example_based_scores(truth, pred).recall;
}

double f_measure(std::span<const Labelset> truth, const PredictionSet& pred) {
  return example_based_scores(truth, pred).f_measure;
}

double ranking_loss(std::span<const Labelset> truth, const PredictionSet& pred) {
  check_shapes(truth, pred);
  const std::size_t k = pred.num_labels();
  std::vector<double> irrelevant;
  double total = 0.0;
  std::size_t counted = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const std::span<const double> scores = pred.scores(i);
    irrelevant.clear();
    for (std::size_t l = 0; l < k; ++l) {
      if (!truth[i].contains(l)) irrelevant.push_back(scores[l]);
    }
    const std::size_t relevant = k - irrelevant.size();
    if (relevant == 0 || irrelevant.empty()) continue;
    std::sort(irrelevant.begin(), irrelevant.end());
    std::size_t misordered = 0;
    for (std::size_t l = 0; l < k; ++l) {
      if (!truth[i].contains(l)) continue;
      // irrelevant labels scored strictly above this relevant one
      misordered += static_cast<std::size_t>(
          irrelevant.end() -
          std::upper_bound(irrelevant.begin(), irrelevant.end(), scores[l]));
    }
    total += static_cast<double>(misordered) /
             (static_cast<double>(relevant) *
              static_cast<double>(irrelevant.size()));
    ++counted;
  }
  return counted == 0 ? 0.0 : total / static_cast<double>(counted);
}

double micro_auc(std::span<const Labelset> truth, const PredictionSet& pred) {
  check_shapes(truth, pred);
  std::vector<double> positives;
  std::vector<double> negatives;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const std::span<const double> scores = pred.scores(i);
    for (std::size_t l = 0; l < pred.num_labels(); ++l) {
      (truth[i].contains(l) ? positives : negatives).push_back(scores[l]);
    }
  }
  if (positives.empty() || negatives.empty()) return 1.0;
  std::sort(negatives.begin(), negatives.end());
  double concordant = 0.0;
  for (double s : positives) {
    concordant += static_cast<double>(
        std::upper_bound(negatives.begin(), negatives.end(), s) -
        negatives.begin());
  }
  return concordant / (static_cast<double>(positives.size()) *
                       static_cast<double>(negatives.size()));
}

EvaluationReport evaluate(std::span<const Labelset> truth,
                          const PredictionSet& pred) {
  EvaluationReport report;
  report.instances = truth.size();
  report.hamming_loss = hamming_loss(truth, pred);
  report.ranking_loss = ranking_loss(truth, pred);
  const ExampleBasedScores eb = example_based_scores(truth, pred);
  report.precision = eb.precision;
  report.recall = eb.recall;
  report.f_measure = eb.f_measure;
  report.empty_predictions = eb.empty_predictions;
  report.empty_truths = eb.empty_truths;
  report.auc = micro_auc(truth, pred);
  return report;
}

}  // namespace mlbalance

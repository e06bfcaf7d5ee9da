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

#ifndef MLBALANCE_IMBALANCE_H_
#define MLBALANCE_IMBALANCE_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "mlbalance/dataset.h"

namespace mlbalance {

// Per-label frequency view shared by the metrics, resamplers and decoupling.
// IRLbl(l) = max_l' count(l') / count(l); labels that never occur have no
// IRLbl and are left out of MeanIR.
struct LabelImbalance {
  std::vector<std::size_t> counts;
  std::vector<std::optional<double>> irlbl;
  double mean_ir = 0.0;

  // IRLbl(l) > MeanIR. Zero-count labels are never minority.
  bool is_minority(std::size_t label) const {
    return irlbl[label].has_value() && *irlbl[label] > mean_ir;
  }
  std::vector<std::size_t> minority_labels() const;
  std::vector<std::size_t> zero_count_labels() const;
};

// Throws UndefinedMetricError if no label occurs at all.
LabelImbalance label_imbalance(const MultiLabelDataset& dataset);

std::vector<std::size_t> label_counts(const MultiLabelDataset& dataset);

// Mean labelset size. Requires n >= 1.
double card(const MultiLabelDataset& dataset);
double dens(const MultiLabelDataset& dataset);

// Throws UndefinedMetricError for a label with zero count.
double irlbl(const MultiLabelDataset& dataset, std::size_t label);

// Average IRLbl over the labels that occur at least once.
double mean_ir(const MultiLabelDataset& dataset);

// 1 - geometric_mean / arithmetic_mean of the IRLbl values of the labels
// active in the instance; 0 for instances with fewer than two active labels.
double scumble_ins(const Labelset& labels, const LabelImbalance& imbalance);
double scumble_ins(const MultiLabelDataset& dataset, std::size_t instance);
std::vector<double> scumble_ins_all(const MultiLabelDataset& dataset,
                                    const LabelImbalance& imbalance);

double scumble(const MultiLabelDataset& dataset);

// Number of distinct labelsets, the empty labelset included when present.
std::size_t distinct_labelsets(const MultiLabelDataset& dataset);

// Theoretical complexity score ln(features * labels * distinct labelsets).
double tcs(std::size_t num_features, std::size_t num_labels,
           std::size_t num_distinct_labelsets);
double tcs(const MultiLabelDataset& dataset);

struct ImbalanceProfile {
  std::size_t instances = 0;
  std::size_t features = 0;
  std::size_t labels = 0;
  double card = 0.0;
  double dens = 0.0;
  std::vector<std::optional<double>> irlbl;
  double mean_ir = 0.0;
  double scumble = 0.0;
  std::vector<double> scumble_ins;
  double tcs = 0.0;
  std::size_t distinct_labelsets = 0;

  std::vector<std::size_t> zero_count_labels() const;
};

// When no label occurs at all every IRLbl is undefined, mean_ir is NaN and
// every SCUMBLE_ins is 0. An empty dataset reports NaN for every real field.
ImbalanceProfile profile(const MultiLabelDataset& dataset);

// Number of instances carrying both labels; symmetric in its arguments.
std::size_t cooccurrence_count(const MultiLabelDataset& dataset,
                               std::size_t label_a, std::size_t label_b);

struct ConcurrenceRow {
  std::size_t label_a = 0;
  std::size_t label_b = 0;
  std::size_t count = 0;
  double irlbl_a = 0.0;
  double irlbl_b = 0.0;

  friend bool operator==(const ConcurrenceRow&,
                         const ConcurrenceRow&) = default;
};

// Pairwise co-occurrence among the `top_majority` most frequent and the
// `top_minority` least frequent (occurring) labels. One row per unordered
// pair, label_a < label_b, sorted by count descending with ties kept in
// label order. Throws InvalidParameterError when a top count exceeds k.
std::vector<ConcurrenceRow> concurrence_export(const MultiLabelDataset& dataset,
                                               std::size_t top_majority,
                                               std::size_t top_minority);

}  // namespace mlbalance

#endif  // MLBALANCE_IMBALANCE_H_

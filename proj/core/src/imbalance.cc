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

#include "mlbalance/imbalance.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "mlbalance/error.h"

namespace mlbalance {
namespace {

void require_instances(const MultiLabelDataset& dataset) {
  if (dataset.num_instances() == 0) {
    throw UndefinedMetricError("metric requires at least one instance");
  }
}

}  // namespace

std::vector<std::size_t> LabelImbalance::minority_labels() const {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < counts.size(); ++l) {
    if (is_minority(l)) out.push_back(l);
  }
  return out;
}

std::vector<std::size_t> LabelImbalance::zero_count_labels() const {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < counts.size(); ++l) {
    if (counts[l] == 0) out.push_back(l);
  }
  return out;
}

std::vector<std::size_t> label_counts(const MultiLabelDataset& dataset) {
  std::vector<std::size_t> counts(dataset.num_labels(), 0);
  for (const Instance& inst : dataset.instances()) {
    for (std::size_t l : inst.labels.indices()) ++counts[l];
  }
  return counts;
}

LabelImbalance label_imbalance(const MultiLabelDataset& dataset) {
  LabelImbalance out;
  out.counts = label_counts(dataset);
  const std::size_t max_count =
      out.counts.empty() ? 0
                         : *std::max_element(out.counts.begin(),
                                             out.counts.end());
  if (max_count == 0) {
    throw UndefinedMetricError("no label occurs in dataset '" +
                               dataset.name() + "'; IRLbl is undefined");
  }
  out.irlbl.resize(out.counts.size());
  double sum = 0.0;
  std::size_t defined = 0;
  for (std::size_t l = 0; l < out.counts.size(); ++l) {
    if (out.counts[l] == 0) continue;
    const double ir = static_cast<double>(max_count) /
                      static_cast<double>(out.counts[l]);
    out.irlbl[l] = ir;
    sum += ir;
    ++defined;
  }
  out.mean_ir = sum / static_cast<double>(defined);
  return out;
}

double card(const MultiLabelDataset& dataset) {
  require_instances(dataset);
  std::size_t total = 0;
  for (const Instance& inst : dataset.instances()) total += inst.labels.count();
  return static_cast<double>(total) /
         static_cast<double>(dataset.num_instances());
}

double dens(const MultiLabelDataset& dataset) {
  return card(dataset) / static_cast<double>(dataset.num_labels());
}

double irlbl(const MultiLabelDataset& dataset, std::size_t label) {
  if (label >= dataset.num_labels()) {
    throw InvalidParameterError("label index out of range");
  }
  const std::vector<std::size_t> counts = label_counts(dataset);
  if (counts[label] == 0) {
    throw UndefinedMetricError("IRLbl undefined for label '" +
                               dataset.label_names()[label] +
                               "': it never occurs");
  }
  const std::size_t max_count = *std::max_element(counts.begin(), counts.end());
  return static_cast<double>(max_count) / static_cast<double>(counts[label]);
}

double mean_ir(const MultiLabelDataset& dataset) {
  return label_imbalance(dataset).mean_ir;
}

double scumble_ins(const Labelset& labels, const LabelImbalance& imbalance) {
  const std::vector<std::size_t> active = labels.indices();
  if (active.size() < 2) return 0.0;
  double log_sum = 0.0;
  double sum = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t l : active) {
    const double ir = *imbalance.irlbl[l];
    log_sum += std::log(ir);
    sum += ir;
    lo = std::min(lo, ir);
    hi = std::max(hi, ir);
  }
  if (lo == hi) return 0.0;
  const double m = static_cast<double>(active.size());
  const double geometric = std::exp(log_sum / m);
  const double arithmetic = sum / m;
  return std::clamp(1.0 - geometric / arithmetic, 0.0, 1.0);
}

double scumble_ins(const MultiLabelDataset& dataset, std::size_t instance) {
  return scumble_ins(dataset.instance(instance).labels,
                     label_imbalance(dataset));
}

std::vector<double> scumble_ins_all(const MultiLabelDataset& dataset,
                                    const LabelImbalance& imbalance) {
  std::vector<double> out;
  out.reserve(dataset.num_instances());
  for (const Instance& inst : dataset.instances()) {
    out.push_back(scumble_ins(inst.labels, imbalance));
  }
  return out;
}

double scumble(const MultiLabelDataset& dataset) {
  require_instances(dataset);
  const std::vector<double> per_instance =
      scumble_ins_all(dataset, label_imbalance(dataset));
  return std::accumulate(per_instance.begin(), per_instance.end(), 0.0) /
         static_cast<double>(per_instance.size());
}

std::size_t distinct_labelsets(const MultiLabelDataset& dataset) {
  std::unordered_set<Labelset, LabelsetHash> seen;
  for (const Instance& inst : dataset.instances()) seen.insert(inst.labels);
  return seen.size();
}

double tcs(std::size_t num_features, std::size_t num_labels,
           std::size_t num_distinct_labelsets) {
  if (num_features == 0 || num_labels == 0 || num_distinct_labelsets == 0) {
    throw UndefinedMetricError(
        "TCS requires at least one feature, label and labelset");
  }
  return std::log(static_cast<double>(num_features)) +
         std::log(static_cast<double>(num_labels)) +
         std::log(static_cast<double>(num_distinct_labelsets));
}

double tcs(const MultiLabelDataset& dataset) {
  return tcs(dataset.num_features(), dataset.num_labels(),
             distinct_labelsets(dataset));
}

std::vector<std::size_t> ImbalanceProfile::zero_count_labels() const {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < irlbl.size(); ++l) {
    if (!irlbl[l]) out.push_back(l);
  }
  return out;
}

ImbalanceProfile profile(const MultiLabelDataset& dataset) {
  if (dataset.num_instances() == 0) {
    constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
    ImbalanceProfile p;
    p.features = dataset.num_features();
    p.labels = dataset.num_labels();
    p.card = p.dens = p.mean_ir = p.scumble = p.tcs = kNaN;
    p.irlbl.assign(p.labels, std::nullopt);
    return p;
  }
  LabelImbalance imbalance;
  imbalance.counts = label_counts(dataset);
  if (std::all_of(imbalance.counts.begin(), imbalance.counts.end(),
                  [](std::size_t c) { return c == 0; })) {
    imbalance.irlbl.assign(imbalance.counts.size(), std::nullopt);
    imbalance.mean_ir = std::numeric_limits<double>::quiet_NaN();
  } else {
    imbalance = label_imbalance(dataset);
  }
  ImbalanceProfile p;
  p.instances = dataset.num_instances();
  p.features = dataset.num_features();
  p.labels = dataset.num_labels();
  p.card = card(dataset);
  p.dens = p.card / static_cast<double>(p.labels);
  p.irlbl = imbalance.irlbl;
  p.mean_ir = imbalance.mean_ir;
  p.scumble_ins = scumble_ins_all(dataset, imbalance);
  p.scumble = std::accumulate(p.scumble_ins.begin(), p.scumble_ins.end(), 0.0) /
              static_cast<double>(p.scumble_ins.size());
  p.distinct_labelsets = distinct_labelsets(dataset);
  p.tcs = p.features == 0 ? 0.0
                          : tcs(p.features, p.labels, p.distinct_labelsets);
  return p;
}

std::size_t cooccurrence_count(const MultiLabelDataset& dataset,
                               std::size_t label_a, std::size_t label_b) {
  std::size_t count = 0;
  for (const Instance& inst : dataset.instances()) {
    if (inst.labels.contains(label_a) && inst.labels.contains(label_b)) ++count;
  }
  return count;
}

std::vector<ConcurrenceRow> concurrence_export(const MultiLabelDataset& dataset,
                                               std::size_t top_majority,
                                               std::size_t top_minority) {
  const std::size_t k = dataset.num_labels();
  if (top_majority > k || top_minority > k) {
    throw InvalidParameterError("top label count exceeds the " +
                                std::to_string(k) + " labels available");
  }
  if (top_majority == 0 && top_minority == 0) return {};
  const LabelImbalance imbalance = label_imbalance(dataset);

  std::vector<std::size_t> occurring;
  for (std::size_t l = 0; l < k; ++l) {
    if (imbalance.counts[l] > 0) occurring.push_back(l);
  }
  std::vector<std::size_t> by_frequency = occurring;
  std::stable_sort(by_frequency.begin(), by_frequency.end(),
                   [&](std::size_t a, std::size_t b) {
                     return imbalance.counts[a] > imbalance.counts[b];
                   });
  std::vector<std::size_t> by_rarity = occurring;
  std::stable_sort(by_rarity.begin(), by_rarity.end(),
                   [&](std::size_t a, std::size_t b) {
                     return imbalance.counts[a] < imbalance.counts[b];
                   });

  std::vector<bool> selected(k, false);
  for (std::size_t i = 0; i < std::min(top_majority, by_frequency.size()); ++i) {
    selected[by_frequency[i]] = true;
  }
  for (std::size_t i = 0; i < std::min(top_minority, by_rarity.size()); ++i) {
    selected[by_rarity[i]] = true;
  }
  std::vector<std::size_t> chosen;
  for (std::size_t l = 0; l < k; ++l) {
    if (selected[l]) chosen.push_back(l);
  }

  // Joint counts for the chosen labels in one pass over the data.
  const std::size_t c = chosen.size();
  std::vector<std::size_t> joint(c * c, 0);
  for (const Instance& inst : dataset.instances()) {
    for (std::size_t a = 0; a < c; ++a) {
      if (!inst.labels.contains(chosen[a])) continue;
      for (std::size_t b = a + 1; b < c; ++b) {
        if (inst.labels.contains(chosen[b])) ++joint[a * c + b];
      }
    }
  }

  std::vector<ConcurrenceRow> rows;
  for (std::size_t a = 0; a < c; ++a) {
    for (std::size_t b = a + 1; b < c; ++b) {
      rows.push_back(ConcurrenceRow{chosen[a], chosen[b], joint[a * c + b],
                                    *imbalance.irlbl[chosen[a]],
                                    *imbalance.irlbl[chosen[b]]});
    }
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ConcurrenceRow& x, const ConcurrenceRow& y) {
                     return x.count > y.count;
                   });
  return rows;
}

}  // namespace mlbalance

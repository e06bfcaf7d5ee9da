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

#ifndef MLBALANCE_RESAMPLE_H_
#define MLBALANCE_RESAMPLE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mlbalance/dataset.h"
#include "mlbalance/imbalance.h"
#include "mlbalance/random.h"

namespace mlbalance {

// Random oversampling: clone floor(n * percentage / 100) minority instances.
struct MlRosParams {
  double percentage = 25.0;
};

// ENN-style undersampling of majority-only instances.
struct MlennParams {
  double threshold = 0.75;
  std::size_t neighbors = 3;
};

// Synthetic oversampling from minority neighborhoods.
struct MlsmoteParams {
  std::size_t neighbors = 5;
};

using ResampleMethod = std::variant<MlRosParams, MlennParams, MlsmoteParams>;

struct ResampleConfig {
  ResampleMethod method;
  std::uint64_t seed = 0;
};

std::string method_name(const ResampleMethod& method);

// Throws InvalidParameterError unless 0 < percentage <= 1000,
// 0 < threshold <= 1, and neighbor counts are in [1, n).
void validate(const ResampleConfig& config, std::size_t num_instances);

struct Addition {
  enum class Kind { kClone, kSynthetic, kDecoupled };
  Kind kind = Kind::kClone;
  // Input row the new instance was cloned from, generated around, or split
  // off from.
  std::size_t source = 0;

  friend bool operator==(const Addition&, const Addition&) = default;
};

// What one transformation did. Indices refer to that stage's input.
struct StageReport {
  std::string method;
  std::size_t instances_before = 0;
  std::size_t instances_after = 0;
  std::vector<Addition> added;
  std::vector<std::size_t> removed;
  // Rows that were decoupled (REMEDIAL only).
  std::vector<std::size_t> split;
  ImbalanceProfile profile_before;
  ImbalanceProfile profile_after;
};

// One stage for a plain resampler, two for a hybrid run.
struct ResampleReport {
  std::vector<StageReport> stages;

  std::size_t instances_before() const;
  std::size_t instances_after() const;
  const ImbalanceProfile& profile_before() const;
  const ImbalanceProfile& profile_after() const;
};

struct ResampleResult {
  MultiLabelDataset dataset;
  ResampleReport report;
};

// ML-ROS. Minority bags are the labels with IRLbl > MeanIR; clones are drawn
// round-robin across bags, a bag dropping out once its IRLbl (updated after
// every clone, MeanIR frozen) falls to MeanIR or below. Clones are appended.
//
// Draws: one uniform_index(|bag|) per clone, in bag (label) order.
ResampleResult ml_ros(const MultiLabelDataset& dataset, double percentage,
                      Rng& rng);

// MLeNN. Instances without any minority label are removed when at least
// neighbors/2 of their nearest neighbors have an adjusted Hamming distance
// above `threshold`. Decisions are made on the unmodified input. No draws.
ResampleResult mlenn(const MultiLabelDataset& dataset, double threshold,
                     std::size_t neighbors);

// MLSMOTE. For every minority label, every instance carrying it spawns one
// synthetic instance from its nearest neighbors within the same label bag.
// Bags with a single member are skipped.
//
// Draws per seed: uniform_index(|neighbors|) for the reference neighbor, then
// one uniform_unit() per numeric feature in feature order.
ResampleResult mlsmote(const MultiLabelDataset& dataset, std::size_t neighbors,
                       Rng& rng);

// Synthetic instance between `seed` and `reference`. Numeric features
// interpolate seed + u * (reference - seed); nominal features take the most
// frequent value among `neighbors`; a label is kept when it appears in more
// than (|neighbors| + 1) / 2 of {seed} plus neighbors.
Instance new_sample(const Schema& schema, const Instance& seed,
                    const Instance& reference,
                    std::span<const Instance* const> neighbors, Rng& rng);

// |a xor b| / |a or b|; 0 for two empty labelsets.
double adjusted_hamming(const Labelset& a, const Labelset& b);

// Dispatches on config.method with Rng(config.seed).
ResampleResult resample(const MultiLabelDataset& dataset,
                        const ResampleConfig& config);
ResampleResult resample(const MultiLabelDataset& dataset,
                        const ResampleMethod& method, Rng& rng);

}  // namespace mlbalance

#endif  // MLBALANCE_RESAMPLE_H_

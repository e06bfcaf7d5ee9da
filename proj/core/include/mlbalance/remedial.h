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

#ifndef MLBALANCE_REMEDIAL_H_
#define MLBALANCE_REMEDIAL_H_

#include <span>
#include <string>
#include <string_view>

#include "mlbalance/dataset.h"
#include "mlbalance/random.h"
#include "mlbalance/resample.h"

namespace mlbalance {

// Which SCUMBLE_ins value an instance must exceed to be decoupled.
struct DecoupleConfig {
  enum class Mode { kMean, kPercentile };

  Mode mode = Mode::kMean;
  // Quantile in (0, 1), used in percentile mode.
  double quantile = 0.5;
  // Discard split sides whose labelset ends up empty.
  bool drop_empty = false;

  static DecoupleConfig mean() { return DecoupleConfig{}; }
  static DecoupleConfig percentile(double q) {
    return DecoupleConfig{Mode::kPercentile, q, false};
  }

  // "mean", or "pNN" for the NN-th percentile (p25, p37, p50, p62, p75 are
  // the usual study points; any integer 1..99 is accepted).
  static DecoupleConfig parse(std::string_view spec);
  std::string to_string() const;
};

// Nearest-rank quantile: the ceil(q * n)-th smallest value (1-based), with
// the rank clamped to [1, n]. `values` must be non-empty.
double nearest_rank_quantile(std::span<const double> values, double q);

// Mean of the values, or their nearest-rank quantile.
double decouple_threshold(std::span<const double> scumble_ins,
                          const DecoupleConfig& config);

// REMEDIAL label decoupling. IRLbl, MeanIR and SCUMBLE_ins are computed once
// on the input. Every instance whose SCUMBLE_ins is strictly above the
// threshold keeps only its minority labels (IRLbl > MeanIR) in place, and a
// clone with the same features holding its remaining labels is appended.
ResampleResult remedial(const MultiLabelDataset& dataset,
                        const DecoupleConfig& config);

struct HybridConfig {
  DecoupleConfig decouple;
  ResampleConfig resample;
};

// remedial() followed by the configured resampler on the decoupled output.
ResampleResult hybrid_resample(const MultiLabelDataset& dataset,
                               const HybridConfig& config, Rng& rng);
ResampleResult hybrid_resample(const MultiLabelDataset& dataset,
                               const HybridConfig& config);

}  // namespace mlbalance

#endif  // MLBALANCE_REMEDIAL_H_

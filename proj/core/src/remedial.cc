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

#include "mlbalance/remedial.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <vector>

#include "mlbalance/error.h"
#include "mlbalance/imbalance.h"
#include "mlbalance/mulan_io.h"

namespace mlbalance {

DecoupleConfig DecoupleConfig::parse(std::string_view spec) {
  if (spec == "mean") return mean();
  if (spec.size() >= 2 && spec.front() == 'p') {
    const std::string_view digits = spec.substr(1);
    int percent = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), percent);
    if (ec == std::errc() && ptr == digits.data() + digits.size() &&
        percent >= 1 && percent <= 99) {
      return percentile(percent / 100.0);
    }
  }
  throw InvalidParameterError("threshold must be 'mean' or pNN with NN in "
                              "1..99, got '" +
                              std::string(spec) + "'");
}

std::string DecoupleConfig::to_string() const {
  if (mode == Mode::kMean) return "mean";
  return "p" + std::to_string(static_cast<int>(std::lround(quantile * 100.0)));
}

double nearest_rank_quantile(std::span<const double> values, double q) {
  if (values.empty()) {
    throw InvalidParameterError("quantile of an empty vector");
  }
  if (!(q > 0.0 && q < 1.0)) {
    throw InvalidParameterError("quantile must be in (0, 1), got " +
                                format_real(q));
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(q * n));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

double decouple_threshold(std::span<const double> scumble_ins,
                          const DecoupleConfig& config) {
  if (config.mode == DecoupleConfig::Mode::kPercentile) {
    return nearest_rank_quantile(scumble_ins, config.quantile);
  }
  if (scumble_ins.empty()) {
    throw InvalidParameterError("threshold of an empty dataset");
  }
  return std::accumulate(scumble_ins.begin(), scumble_ins.end(), 0.0) /
         static_cast<double>(scumble_ins.size());
}

ResampleResult remedial(const MultiLabelDataset& dataset,
                        const DecoupleConfig& config) {
  StageReport stage;
  stage.method = "remedial-" + config.to_string();
  stage.instances_before = dataset.num_instances();
  stage.profile_before = profile(dataset);

  const LabelImbalance imbalance = label_imbalance(dataset);
  const std::vector<double>& per_instance = stage.profile_before.scumble_ins;
  const double threshold = decouple_threshold(per_instance, config);

  const std::size_t k = dataset.num_labels();
  std::vector<Instance> kept;
  std::vector<Instance> clones;
  kept.reserve(dataset.num_instances());
  for (std::size_t i = 0; i < dataset.num_instances(); ++i) {
    const Instance& inst = dataset.instance(i);
    if (!(per_instance[i] > threshold)) {
      kept.push_back(inst);
      continue;
    }
    stage.split.push_back(i);
    Instance minority_side{inst.features, Labelset(k)};
    Instance majority_side{inst.features, Labelset(k)};
    for (std::size_t l : inst.labels.indices()) {
      if (imbalance.is_minority(l)) {
        minority_side.labels.set(l);
      } else {
        majority_side.labels.set(l);
      }
    }
    if (config.drop_empty && minority_side.labels.empty()) {
      stage.removed.push_back(i);
    } else {
      kept.push_back(std::move(minority_side));
    }
    if (!(config.drop_empty && majority_side.labels.empty())) {
      clones.push_back(std::move(majority_side));
      stage.added.push_back(Addition{Addition::Kind::kDecoupled, i});
    }
  }
  for (Instance& clone : clones) kept.push_back(std::move(clone));

  MultiLabelDataset output = dataset.with_instances(std::move(kept));
  stage.instances_after = output.num_instances();
  stage.profile_after = profile(output);
  ResampleReport report;
  report.stages.push_back(std::move(stage));
  return ResampleResult{std::move(output), std::move(report)};
}

ResampleResult hybrid_resample(const MultiLabelDataset& dataset,
                               const HybridConfig& config, Rng& rng) {
  ResampleResult decoupled = remedial(dataset, config.decouple);
  ResampleResult resampled =
      resample(decoupled.dataset, config.resample.method, rng);
  ResampleReport report = std::move(decoupled.report);
  for (StageReport& stage : resampled.report.stages) {
    report.stages.push_back(std::move(stage));
  }
  return ResampleResult{std::move(resampled.dataset), std::move(report)};
}

ResampleResult hybrid_resample(const MultiLabelDataset& dataset,
                               const HybridConfig& config) {
  Rng rng(config.resample.seed);
  return hybrid_resample(dataset, config, rng);
}

}  // namespace mlbalance

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

#include "mlbalance/resample.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mlbalance/error.h"
#include "mlbalance/feature_distance.h"
#include "mlbalance/mulan_io.h"

namespace mlbalance {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_percentage(double percentage) {
  if (!(percentage > 0.0 && percentage <= 1000.0)) {
    throw InvalidParameterError("ML-ROS percentage must be in (0, 1000], got " +
                                format_real(percentage));
  }
}

void check_neighbors(std::size_t neighbors, std::size_t n,
                     const char* method) {
  if (neighbors == 0) {
    throw InvalidParameterError(std::string(method) +
                                " needs at least one neighbor");
  }
  if (neighbors >= n) {
    throw InvalidParameterError(std::string(method) + " neighbor count " +
                                std::to_string(neighbors) +
                                " must be below the instance count " +
                                std::to_string(n));
  }
}

std::vector<std::size_t> instances_with_label(const MultiLabelDataset& dataset,
                                              std::size_t label) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dataset.num_instances(); ++i) {
    if (dataset.instance(i).labels.contains(label)) out.push_back(i);
  }
  return out;
}

StageReport start_stage(std::string method, const MultiLabelDataset& input) {
  StageReport stage;
  stage.method = std::move(method);
  stage.instances_before = input.num_instances();
  stage.profile_before = profile(input);
  return stage;
}

ResampleResult finish_stage(StageReport stage, MultiLabelDataset output) {
  stage.instances_after = output.num_instances();
  stage.profile_after = profile(output);
  ResampleReport report;
  report.stages.push_back(std::move(stage));
  return ResampleResult{std::move(output), std::move(report)};
}

}  // namespace

std::string method_name(const ResampleMethod& method) {
  return std::visit(Overloaded{
                        [](const MlRosParams&) { return std::string("mlros"); },
                        [](const MlennParams&) { return std::string("mlenn"); },
                        [](const MlsmoteParams&) {
                          return std::string("mlsmote");
                        },
                    },
                    method);
}

void validate(const ResampleConfig& config, std::size_t num_instances) {
  std::visit(
      Overloaded{
          [](const MlRosParams& p) { check_percentage(p.percentage); },
          [&](const MlennParams& p) {
            if (!(p.threshold > 0.0 && p.threshold <= 1.0)) {
              throw InvalidParameterError(
                  "MLeNN threshold must be in (0, 1], got " +
                  format_real(p.threshold));
            }
            check_neighbors(p.neighbors, num_instances, "MLeNN");
          },
          [&](const MlsmoteParams& p) {
            check_neighbors(p.neighbors, num_instances, "MLSMOTE");
          },
      },
      config.method);
}

std::size_t ResampleReport::instances_before() const {
  return stages.front().instances_before;
}
std::size_t ResampleReport::instances_after() const {
  return stages.back().instances_after;
}
const ImbalanceProfile& ResampleReport::profile_before() const {
  return stages.front().profile_before;
}
const ImbalanceProfile& ResampleReport::profile_after() const {
  return stages.back().profile_after;
}

double adjusted_hamming(const Labelset& a, const Labelset& b) {
  const std::size_t either = a.union_count(b);
  if (either == 0) return 0.0;
  return static_cast<double>(a.symmetric_difference_count(b)) /
         static_cast<double>(either);
}

ResampleResult ml_ros(const MultiLabelDataset& dataset, double percentage,
                      Rng& rng) {
  check_percentage(percentage);
  StageReport stage = start_stage("mlros", dataset);
  const LabelImbalance imbalance = label_imbalance(dataset);
  const double frozen_mean_ir = imbalance.mean_ir;
  std::vector<std::size_t> counts = imbalance.counts;
  std::size_t max_count = *std::max_element(counts.begin(), counts.end());

  struct Bag {
    std::size_t label;
    std::vector<std::size_t> members;
  };
  std::vector<Bag> bags;
  for (std::size_t l : imbalance.minority_labels()) {
    bags.push_back(Bag{l, instances_with_label(dataset, l)});
  }

  std::size_t budget = static_cast<std::size_t>(std::floor(
      static_cast<double>(dataset.num_instances()) * percentage / 100.0));

  std::vector<Instance> rows(dataset.instances().begin(),
                             dataset.instances().end());
  while (budget > 0 && !bags.empty()) {
    for (std::size_t b = 0; b < bags.size() && budget > 0;) {
      const Bag& bag = bags[b];
      const std::size_t source = bag.members[rng.uniform_index(bag.members.size())];
      const Instance& clone = dataset.instance(source);
      rows.push_back(clone);
      stage.added.push_back(Addition{Addition::Kind::kClone, source});
      for (std::size_t l : clone.labels.indices()) {
        max_count = std::max(max_count, ++counts[l]);
      }
      --budget;
      const double ir = static_cast<double>(max_count) /
                        static_cast<double>(counts[bag.label]);
      if (ir <= frozen_mean_ir) {
        bags.erase(bags.begin() + static_cast<std::ptrdiff_t>(b));
      } else {
        ++b;
      }
    }
  }
  return finish_stage(std::move(stage), dataset.with_instances(std::move(rows)));
}

ResampleResult mlenn(const MultiLabelDataset& dataset, double threshold,
                     std::size_t neighbors) {
  validate(ResampleConfig{MlennParams{threshold, neighbors}, 0},
           dataset.num_instances());
  StageReport stage = start_stage("mlenn", dataset);
  const LabelImbalance imbalance = label_imbalance(dataset);
  const FeatureMetric metric(dataset);

  std::vector<bool> marked(dataset.num_instances(), false);
  for (std::size_t i = 0; i < dataset.num_instances(); ++i) {
    const Instance& sample = dataset.instance(i);
    const std::vector<std::size_t> active = sample.labels.indices();
    const bool has_minority =
        std::any_of(active.begin(), active.end(),
                    [&](std::size_t l) { return imbalance.is_minority(l); });
    if (has_minority) continue;
    std::size_t differences = 0;
    for (std::size_t j :
         nearest_neighbors(metric, dataset, sample.features, neighbors, i)) {
      if (adjusted_hamming(sample.labels, dataset.instance(j).labels) >
          threshold) {
        ++differences;
      }
    }
    marked[i] = 2 * differences >= neighbors;
  }

  std::vector<Instance> rows;
  rows.reserve(dataset.num_instances());
  for (std::size_t i = 0; i < dataset.num_instances(); ++i) {
    if (marked[i]) {
      stage.removed.push_back(i);
    } else {
      rows.push_back(dataset.instance(i));
    }
  }
  return finish_stage(std::move(stage), dataset.with_instances(std::move(rows)));
}

Instance new_sample(const Schema& schema, const Instance& seed,
                    const Instance& reference,
                    std::span<const Instance* const> neighbors, Rng& rng) {
  if (neighbors.empty()) {
    throw InvalidParameterError("new_sample needs at least one neighbor");
  }
  Instance synth;
  synth.features.reserve(schema.num_features());
  for (std::size_t f = 0; f < schema.num_features(); ++f) {
    const AttributeSpec& attr = schema.attributes[f];
    if (!attr.is_nominal()) {
      const double u = rng.uniform_unit();
      const FeatureValue& s = seed.features[f];
      const FeatureValue& r = reference.features[f];
      if (s.is_missing() || r.is_missing()) {
        synth.features.push_back(s);
        continue;
      }
      const double a = s.as_numeric();
      const double b = r.as_numeric();
      const double value =
          std::clamp(a + u * (b - a), std::min(a, b), std::max(a, b));
      synth.features.push_back(FeatureValue::numeric(value));
      continue;
    }
    std::vector<std::size_t> votes(attr.values.size(), 0);
    bool any = false;
    for (const Instance* n : neighbors) {
      const FeatureValue& v = n->features[f];
      if (!v.is_nominal()) continue;
      ++votes[v.as_nominal()];
      any = true;
    }
    if (!any) {
      synth.features.push_back(FeatureValue::missing());
      continue;
    }
    const auto best = std::max_element(votes.begin(), votes.end());
    synth.features.push_back(FeatureValue::nominal(
        static_cast<std::uint32_t>(best - votes.begin())));
  }

  const std::size_t k = schema.num_labels();
  std::vector<std::size_t> label_votes(k, 0);
  for (std::size_t l : seed.labels.indices()) ++label_votes[l];
  for (const Instance* n : neighbors) {
    for (std::size_t l : n->labels.indices()) ++label_votes[l];
  }
  synth.labels = Labelset(k);
  // count > (|neighbors| + 1) / 2, kept in integers.
  for (std::size_t l = 0; l < k; ++l) {
    if (2 * label_votes[l] > neighbors.size() + 1) synth.labels.set(l);
  }
  return synth;
}

ResampleResult mlsmote(const MultiLabelDataset& dataset, std::size_t neighbors,
                       Rng& rng) {
  if (neighbors == 0) {
    throw InvalidParameterError("MLSMOTE needs at least one neighbor");
  }
  StageReport stage = start_stage("mlsmote", dataset);
  const LabelImbalance imbalance = label_imbalance(dataset);
  const FeatureMetric metric(dataset);

  std::vector<Instance> rows(dataset.instances().begin(),
                             dataset.instances().end());
  std::vector<const Instance*> neighbor_rows;
  for (std::size_t label : imbalance.minority_labels()) {
    const std::vector<std::size_t> bag = instances_with_label(dataset, label);
    if (bag.size() < 2) continue;
    for (std::size_t seed : bag) {
      const Instance& sample = dataset.instance(seed);
      const std::vector<std::size_t> nearest =
          nearest_neighbors(metric, dataset, sample.features, bag, neighbors,
                            seed);
      const std::size_t reference = nearest[rng.uniform_index(nearest.size())];
      neighbor_rows.clear();
      for (std::size_t j : nearest) neighbor_rows.push_back(&dataset.instance(j));
      rows.push_back(new_sample(dataset.schema(), sample,
                                dataset.instance(reference), neighbor_rows,
                                rng));
      stage.added.push_back(Addition{Addition::Kind::kSynthetic, seed});
    }
  }
  return finish_stage(std::move(stage), dataset.with_instances(std::move(rows)));
}

ResampleResult resample(const MultiLabelDataset& dataset,
                        const ResampleMethod& method, Rng& rng) {
  return std::visit(
      Overloaded{
          [&](const MlRosParams& p) {
            return ml_ros(dataset, p.percentage, rng);
          },
          [&](const MlennParams& p) {
            return mlenn(dataset, p.threshold, p.neighbors);
          },
          [&](const MlsmoteParams& p) {
            return mlsmote(dataset, p.neighbors, rng);
          },
      },
      method);
}

ResampleResult resample(const MultiLabelDataset& dataset,
                        const ResampleConfig& config) {
  Rng rng(config.seed);
  return resample(dataset, config.method, rng);
}

}  // namespace mlbalance

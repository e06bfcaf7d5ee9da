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

#include "fixtures.h"

#include <algorithm>

namespace mlbalance::testing {

MultiLabelDataset make_dataset(std::size_t num_labels,
                               const std::vector<Row>& rows,
                               std::vector<std::string> label_names) {
  const std::size_t m = rows.empty() ? 0 : rows.front().x.size();
  Schema schema;
  for (std::size_t f = 0; f < m; ++f) {
    schema.attributes.push_back(AttributeSpec::numeric("f" + std::to_string(f)));
  }
  if (label_names.empty()) {
    for (std::size_t l = 0; l < num_labels; ++l) {
      label_names.push_back("L" + std::to_string(l));
    }
  }
  schema.label_names = std::move(label_names);
  std::vector<Instance> instances;
  for (const Row& row : rows) {
    Instance inst;
    for (double v : row.x) inst.features.push_back(FeatureValue::numeric(v));
    inst.labels = Labelset(num_labels, std::span<const std::size_t>(row.labels));
    instances.push_back(std::move(inst));
  }
  return MultiLabelDataset("fixture", std::move(schema), std::move(instances));
}

MultiLabelDataset toy6() {
  return make_dataset(3,
                      {{{0.0}, {0}},
                       {{0.1}, {0}},
                       {{0.2}, {0}},
                       {{0.3}, {0, 1}},
                       {{0.4}, {1}},
                       {{0.5}, {0, 2}}},
                      {"A", "B", "C"});
}

MultiLabelDataset random_dataset(std::mt19937_64& gen, const RandomSpec& spec) {
  std::uniform_int_distribution<std::size_t> n_dist(spec.min_instances,
                                                    spec.max_instances);
  std::uniform_int_distribution<std::size_t> k_dist(spec.min_labels,
                                                    spec.max_labels);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = n_dist(gen);
  const std::size_t k = k_dist(gen);

  Schema schema;
  for (std::size_t f = 0; f < spec.numeric_features; ++f) {
    schema.attributes.push_back(AttributeSpec::numeric("num" + std::to_string(f)));
  }
  for (std::size_t f = 0; f < spec.nominal_features; ++f) {
    schema.attributes.push_back(AttributeSpec::nominal(
        "nom" + std::to_string(f), {"red", "green", "blue"}));
  }
  for (std::size_t l = 0; l < k; ++l) {
    schema.label_names.push_back("lab" + std::to_string(l));
  }

  std::vector<double> rate(k);
  for (double& r : rate) r = 0.05 + 0.65 * unit(gen);

  std::vector<Instance> instances(n);
  for (std::size_t i = 0; i < n; ++i) {
    Instance& inst = instances[i];
    for (std::size_t f = 0; f < spec.numeric_features; ++f) {
      if (unit(gen) < spec.missing_rate) {
        inst.features.push_back(FeatureValue::missing());
      } else if (spec.continuous) {
        inst.features.push_back(FeatureValue::numeric(unit(gen) * 10.0 - 5.0));
      } else {
        inst.features.push_back(
            FeatureValue::numeric(static_cast<double>(gen() % 4)));
      }
    }
    for (std::size_t f = 0; f < spec.nominal_features; ++f) {
      if (unit(gen) < spec.missing_rate) {
        inst.features.push_back(FeatureValue::missing());
      } else {
        inst.features.push_back(
            FeatureValue::nominal(static_cast<std::uint32_t>(gen() % 3)));
      }
    }
    inst.labels = Labelset(k);
    for (std::size_t l = 0; l < k; ++l) {
      if (unit(gen) < rate[l]) inst.labels.set(l);
    }
  }
  if (spec.some_label && n > 0 && instances[0].labels.empty()) {
    instances[0].labels.set(gen() % k);
  }
  return MultiLabelDataset("random", std::move(schema), std::move(instances));
}

MultiLabelDataset imbalanced_dataset(std::uint64_t seed, std::size_t instances,
                                     std::size_t labels, std::size_t features) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::normal_distribution<double> centre(0.0, 1.5);

  std::vector<double> rate(labels);
  for (std::size_t l = 0; l < labels; ++l) {
    if (l == 0) {
      rate[l] = 0.6;
    } else if (l == 1) {
      rate[l] = 0.45;
    } else {
      rate[l] = std::max(0.02, 0.12 - 0.015 * static_cast<double>(l - 2));
    }
  }
  std::vector<std::vector<double>> mu(labels, std::vector<double>(features));
  for (auto& row : mu) {
    for (double& v : row) v = centre(gen);
  }

  std::vector<Row> rows(instances);
  for (Row& row : rows) {
    for (std::size_t l = 0; l < labels; ++l) {
      if (unit(gen) < rate[l]) row.labels.push_back(l);
    }
    const bool rare = std::any_of(row.labels.begin(), row.labels.end(),
                                  [](std::size_t l) { return l >= 2; });
    if (rare && row.labels.front() != 0 && unit(gen) < 0.8) {
      row.labels.insert(row.labels.begin(), 0);
    }
    if (row.labels.empty()) row.labels.push_back(gen() % 2);
    row.x.resize(features);
    for (std::size_t f = 0; f < features; ++f) {
      double v = noise(gen);
      for (std::size_t l : row.labels) v += mu[l][f];
      row.x[f] = v;
    }
  }
  return make_dataset(labels, rows);
}

}  // namespace mlbalance::testing

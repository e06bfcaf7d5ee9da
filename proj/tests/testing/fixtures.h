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

#ifndef MLBALANCE_TESTS_TESTING_FIXTURES_H_
#define MLBALANCE_TESTS_TESTING_FIXTURES_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mlbalance/dataset.h"

namespace mlbalance::testing {

// Labels A, B, C over labelsets {A},{A},{A},{A,B},{B},{A,C}; one numeric
// feature x = 0.0, 0.1, ..., 0.5.
MultiLabelDataset toy6();

struct Row {
  std::vector<double> x;
  std::vector<std::size_t> labels;
};

// All-numeric dataset with features f0.. and labels named L0.. unless given.
MultiLabelDataset make_dataset(std::size_t num_labels,
                               const std::vector<Row>& rows,
                               std::vector<std::string> label_names = {});

struct RandomSpec {
  std::size_t min_instances = 1;
  std::size_t max_instances = 20;
  std::size_t min_labels = 1;
  std::size_t max_labels = 5;
  std::size_t numeric_features = 2;
  std::size_t nominal_features = 1;
  double missing_rate = 0.0;
  // Continuous uniform numerics; otherwise drawn from a coarse grid so ties
  // and repeated rows occur.
  bool continuous = true;
  // Guarantees instance 0 carries at least one label.
  bool some_label = true;
};

MultiLabelDataset random_dataset(std::mt19937_64& gen, const RandomSpec& spec);

// Numeric-feature dataset with two frequent labels and rare labels that mostly
// co-occur with label 0: high SCUMBLE and MeanIR.
MultiLabelDataset imbalanced_dataset(std::uint64_t seed,
                                     std::size_t instances = 500,
                                     std::size_t labels = 8,
                                     std::size_t features = 10);

}  // namespace mlbalance::testing

#endif  // MLBALANCE_TESTS_TESTING_FIXTURES_H_

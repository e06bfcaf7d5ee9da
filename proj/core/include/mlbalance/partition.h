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

#ifndef MLBALANCE_PARTITION_H_
#define MLBALANCE_PARTITION_H_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "mlbalance/dataset.h"

namespace mlbalance {

struct FoldAssignment {
  std::size_t num_folds = 0;
  // fold_of[i] is the test fold of instance i.
  std::vector<std::size_t> fold_of;

  std::vector<std::size_t> test_rows(std::size_t fold) const;
  std::vector<std::size_t> train_rows(std::size_t fold) const;
  std::vector<std::size_t> fold_sizes() const;
};

// Iterative label stratification into `folds` folds.
//
// Instances are visited in a seeded random order. Labels are handled rarest
// first (fewest unassigned carriers, ties by index); each carrier goes to the
// eligible fold with the largest remaining demand for that label, then the
// largest remaining overall demand, then a seeded draw. Instances with an
// empty labelset are placed last by overall demand. A fold is eligible while
// it is below its target size; targets are floor(n/folds) or ceil(n/folds),
// so fold sizes never differ by more than one.
//
// Throws InvalidParameterError when folds < 2 or folds > n.
FoldAssignment stratified_kfold(const MultiLabelDataset& dataset,
                                std::size_t folds, std::uint64_t seed);

struct FoldSplit {
  MultiLabelDataset train;
  MultiLabelDataset test;
};

// Train/test datasets for one fold, rows kept in input order.
FoldSplit split_fold(const MultiLabelDataset& dataset,
                     const FoldAssignment& assignment, std::size_t fold);

}  // namespace mlbalance

#endif  // MLBALANCE_PARTITION_H_

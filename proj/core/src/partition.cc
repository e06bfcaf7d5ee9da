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

#include "mlbalance/partition.h"

#include <limits>
#include <numeric>

#include "mlbalance/error.h"
#include "mlbalance/imbalance.h"
#include "mlbalance/random.h"

namespace mlbalance {

std::vector<std::size_t> FoldAssignment::test_rows(std::size_t fold) const {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < fold_of.size(); ++i) {
    if (fold_of[i] == fold) rows.push_back(i);
  }
  return rows;
}

std::vector<std::size_t> FoldAssignment::train_rows(std::size_t fold) const {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < fold_of.size(); ++i) {
    if (fold_of[i] != fold) rows.push_back(i);
  }
  return rows;
}

std::vector<std::size_t> FoldAssignment::fold_sizes() const {
  std::vector<std::size_t> sizes(num_folds, 0);
  for (std::size_t f : fold_of) ++sizes[f];
  return sizes;
}

FoldAssignment stratified_kfold(const MultiLabelDataset& dataset,
                                std::size_t folds, std::uint64_t seed) {
  const std::size_t n = dataset.num_instances();
  const std::size_t k = dataset.num_labels();
  if (folds < 2) throw InvalidParameterError("need at least 2 folds");
  if (folds > n) {
    throw InvalidParameterError("cannot split " + std::to_string(n) +
                                " instances into " + std::to_string(folds) +
                                " folds");
  }

  Rng rng(seed);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng.shuffle(std::span<std::size_t>(order));

  const std::size_t base = n / folds;
  const std::size_t extra = n % folds;
  std::vector<std::size_t> sizes(folds, 0);
  std::size_t folds_at_ceil = 0;
  auto eligible = [&](std::size_t j) {
    return sizes[j] < base || (sizes[j] == base && folds_at_ceil < extra);
  };

  // Demands are scaled by `folds` to stay integral:
  // label_demand[l][j] = count(l) - folds * assigned(l, j).
  const std::vector<std::size_t> counts = label_counts(dataset);
  std::vector<std::vector<long long>> label_demand(
      k, std::vector<long long>(folds));
  for (std::size_t l = 0; l < k; ++l) {
    for (std::size_t j = 0; j < folds; ++j) {
      label_demand[l][j] = static_cast<long long>(counts[l]);
    }
  }
  std::vector<std::size_t> remaining = counts;
  std::vector<std::size_t> fold_of(n, folds);

  auto assign = [&](std::size_t i, std::size_t j) {
    fold_of[i] = j;
    if (++sizes[j] == base + 1) ++folds_at_ceil;
    for (std::size_t l : dataset.instance(i).labels.indices()) {
      label_demand[l][j] -= static_cast<long long>(folds);
      --remaining[l];
    }
  };

  std::vector<std::size_t> ties;
  auto pick = [&](const std::vector<long long>* demand) {
    ties.clear();
    long long best_demand = std::numeric_limits<long long>::min();
    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    for (std::size_t j = 0; j < folds; ++j) {
      if (!eligible(j)) continue;
      const long long d = demand ? (*demand)[j] : 0;
      if (d > best_demand || (d == best_demand && sizes[j] < best_size)) {
        ties.assign(1, j);
        best_demand = d;
        best_size = sizes[j];
      } else if (d == best_demand && sizes[j] == best_size) {
        ties.push_back(j);
      }
    }
    return ties.size() == 1 ? ties.front() : ties[rng.uniform_index(ties.size())];
  };

  while (true) {
    std::size_t label = k;
    for (std::size_t l = 0; l < k; ++l) {
      if (remaining[l] > 0 && (label == k || remaining[l] < remaining[label])) {
        label = l;
      }
    }
    if (label == k) break;
    for (std::size_t i : order) {
      if (fold_of[i] != folds || !dataset.instance(i).labels.contains(label)) {
        continue;
      }
      assign(i, pick(&label_demand[label]));
    }
  }
  for (std::size_t i : order) {
    if (fold_of[i] == folds) assign(i, pick(nullptr));
  }
  return FoldAssignment{folds, std::move(fold_of)};
}

FoldSplit split_fold(const MultiLabelDataset& dataset,
                     const FoldAssignment& assignment, std::size_t fold) {
  if (fold >= assignment.num_folds) {
    throw InvalidParameterError("fold index out of range");
  }
  if (assignment.fold_of.size() != dataset.num_instances()) {
    throw InvalidParameterError("fold assignment does not match the dataset");
  }
  const std::vector<std::size_t> train = assignment.train_rows(fold);
  const std::vector<std::size_t> test = assignment.test_rows(fold);
  return FoldSplit{dataset.subset(train), dataset.subset(test)};
}

}  // namespace mlbalance

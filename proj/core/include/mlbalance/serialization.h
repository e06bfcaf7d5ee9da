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

#ifndef MLBALANCE_SERIALIZATION_H_
#define MLBALANCE_SERIALIZATION_H_

#include <span>
#include <string>

#include "mlbalance/dataset.h"
#include "mlbalance/evaluation.h"
#include "mlbalance/imbalance.h"
#include "mlbalance/partition.h"
#include "mlbalance/resample.h"

// Text encodings of reports. JSON objects keep a fixed key order and use
// shortest round-trip number formatting, so equal inputs give equal bytes.
namespace mlbalance {

// Flat object keyed by ImbalanceProfile field names. Undefined IRLbl entries
// are null.
std::string profile_to_json(const ImbalanceProfile& profile);

std::string report_to_json(const ResampleReport& report);

std::string evaluation_to_json(const EvaluationReport& report);

// Header `label_a,label_b,count,irlbl_a,irlbl_b`, labels by name.
std::string concurrence_to_csv(const MultiLabelDataset& dataset,
                               std::span<const ConcurrenceRow> rows);

// Header `instance_index,fold`.
std::string folds_to_csv(const FoldAssignment& assignment);

// 16 hex digits of FNV-1a 64 over `text`.
std::string digest(std::string_view text);

}  // namespace mlbalance

#endif  // MLBALANCE_SERIALIZATION_H_

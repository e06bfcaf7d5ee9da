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

#include "mlbalance/serialization.h"

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "mlbalance/mulan_io.h"

namespace mlbalance {
namespace {

using Json = nlohmann::ordered_json;

Json profile_json(const ImbalanceProfile& p) {
  Json irlbl = Json::array();
  for (const auto& ir : p.irlbl) {
    if (ir) {
      irlbl.push_back(*ir);
    } else {
      irlbl.push_back(nullptr);
    }
  }
  Json j;
  j["instances"] = p.instances;
  j["features"] = p.features;
  j["labels"] = p.labels;
  j["card"] = p.card;
  j["dens"] = p.dens;
  j["irlbl"] = std::move(irlbl);
  j["mean_ir"] = p.mean_ir;
  j["scumble"] = p.scumble;
  j["scumble_ins"] = p.scumble_ins;
  j["tcs"] = p.tcs;
  j["distinct_labelsets"] = p.distinct_labelsets;
  return j;
}

const char* kind_name(Addition::Kind kind) {
  switch (kind) {
    case Addition::Kind::kClone: return "clone";
    case Addition::Kind::kSynthetic: return "synthetic";
    case Addition::Kind::kDecoupled: return "decoupled";
  }
  return "unknown";
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(s);
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string profile_to_json(const ImbalanceProfile& profile) {
  return profile_json(profile).dump(2) + "\n";
}

std::string report_to_json(const ResampleReport& report) {
  Json stages = Json::array();
  for (const StageReport& stage : report.stages) {
    Json added = Json::array();
    for (const Addition& a : stage.added) {
      Json entry;
      entry["kind"] = kind_name(a.kind);
      entry["source"] = a.source;
      added.push_back(std::move(entry));
    }
    Json s;
    s["method"] = stage.method;
    s["instances_before"] = stage.instances_before;
    s["instances_after"] = stage.instances_after;
    s["added"] = std::move(added);
    s["removed"] = stage.removed;
    s["split"] = stage.split;
    s["profile_before"] = profile_json(stage.profile_before);
    s["profile_after"] = profile_json(stage.profile_after);
    stages.push_back(std::move(s));
  }
  Json j;
  j["instances_before"] = report.instances_before();
  j["instances_after"] = report.instances_after();
  j["stages"] = std::move(stages);
  return j.dump(2) + "\n";
}

std::string evaluation_to_json(const EvaluationReport& report) {
  Json j;
  j["instances"] = report.instances;
  j["hamming_loss"] = report.hamming_loss;
  j["ranking_loss"] = report.ranking_loss;
  j["precision"] = report.precision;
  j["recall"] = report.recall;
  j["f_measure"] = report.f_measure;
  j["auc"] = report.auc;
  j["empty_predictions"] = report.empty_predictions;
  j["empty_truths"] = report.empty_truths;
  return j.dump(2) + "\n";
}

std::string concurrence_to_csv(const MultiLabelDataset& dataset,
                               std::span<const ConcurrenceRow> rows) {
  std::ostringstream out;
  out << "label_a,label_b,count,irlbl_a,irlbl_b\n";
  for (const ConcurrenceRow& row : rows) {
    out << csv_field(dataset.label_names()[row.label_a]) << ','
        << csv_field(dataset.label_names()[row.label_b]) << ',' << row.count
        << ',' << format_real(row.irlbl_a) << ',' << format_real(row.irlbl_b)
        << '\n';
  }
  return out.str();
}

std::string folds_to_csv(const FoldAssignment& assignment) {
  std::ostringstream out;
  out << "instance_index,fold\n";
  for (std::size_t i = 0; i < assignment.fold_of.size(); ++i) {
    out << i << ',' << assignment.fold_of[i] << '\n';
  }
  return out.str();
}

std::string digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace mlbalance

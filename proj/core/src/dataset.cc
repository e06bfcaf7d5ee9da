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

#include "mlbalance/dataset.h"

#include <bit>
#include <cmath>
#include <unordered_set>
#include <utility>

#include "mlbalance/error.h"

namespace mlbalance {

Labelset::Labelset(std::size_t num_labels)
    : num_labels_(num_labels), words_((num_labels + 63) / 64, 0) {}

Labelset::Labelset(std::size_t num_labels,
                   std::initializer_list<std::size_t> active)
    : Labelset(num_labels) {
  for (std::size_t label : active) set(label);
}

Labelset::Labelset(std::size_t num_labels, std::span<const std::size_t> active)
    : Labelset(num_labels) {
  for (std::size_t label : active) set(label);
}

void Labelset::set(std::size_t label, bool active) {
  if (label >= num_labels_) {
    throw InvalidParameterError("label index " + std::to_string(label) +
                                " out of range for " +
                                std::to_string(num_labels_) + " labels");
  }
  const std::uint64_t bit = std::uint64_t{1} << (label % 64);
  if (active) {
    words_[label / 64] |= bit;
  } else {
    words_[label / 64] &= ~bit;
  }
}

std::size_t Labelset::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool Labelset::empty() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::vector<std::size_t> Labelset::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t Labelset::intersection_count(const Labelset& other) const {
  std::size_t total = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    total += std::popcount(words_[w] & other.words_[w]);
  }
  return total;
}

std::size_t Labelset::union_count(const Labelset& other) const {
  std::size_t total = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    total += std::popcount(words_[w] | other.words_[w]);
  }
  return total;
}

std::size_t Labelset::symmetric_difference_count(const Labelset& other) const {
  std::size_t total = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    total += std::popcount(words_[w] ^ other.words_[w]);
  }
  return total;
}

std::size_t LabelsetHash::operator()(const Labelset& labels) const {
  // FNV-1a over the packed words.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::uint64_t w : labels.words()) {
    h ^= w;
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h);
}

void Schema::validate() const {
  std::unordered_set<std::string> names;
  for (const AttributeSpec& attr : attributes) {
    if (!names.insert(attr.name).second) {
      throw InvalidParameterError("duplicate attribute name '" + attr.name +
                                  "'");
    }
    if (attr.is_nominal()) {
      if (attr.values.empty()) {
        throw InvalidParameterError("nominal attribute '" + attr.name +
                                    "' declares no values");
      }
      std::unordered_set<std::string> seen;
      for (const std::string& v : attr.values) {
        if (!seen.insert(v).second) {
          throw InvalidParameterError("nominal attribute '" + attr.name +
                                      "' repeats value '" + v + "'");
        }
      }
    }
  }
  for (const std::string& label : label_names) {
    if (!names.insert(label).second) {
      throw InvalidParameterError("label name '" + label +
                                  "' is duplicated or clashes with a feature");
    }
  }
}

MultiLabelDataset::MultiLabelDataset(std::string name, Schema schema,
                                     std::vector<Instance> instances)
    : MultiLabelDataset(std::move(name),
                        std::make_shared<const Schema>(std::move(schema)),
                        std::move(instances)) {}

MultiLabelDataset::MultiLabelDataset(std::string name,
                                     std::shared_ptr<const Schema> schema,
                                     std::vector<Instance> instances)
    : name_(std::move(name)),
      schema_(std::move(schema)),
      instances_(std::move(instances)) {
  schema_->validate();
  validate_instances();
}

void MultiLabelDataset::validate_instances() const {
  const std::size_t m = schema_->num_features();
  const std::size_t k = schema_->num_labels();
  for (std::size_t i = 0; i < instances_.size(); ++i) {
    const Instance& inst = instances_[i];
    if (inst.features.size() != m) {
      throw InvalidParameterError(
          "instance " + std::to_string(i) + " has " +
          std::to_string(inst.features.size()) + " features, expected " +
          std::to_string(m));
    }
    if (inst.labels.num_labels() != k) {
      throw InvalidParameterError("instance " + std::to_string(i) +
                                  " labelset is sized for " +
                                  std::to_string(inst.labels.num_labels()) +
                                  " labels, expected " + std::to_string(k));
    }
    for (std::size_t f = 0; f < m; ++f) {
      const FeatureValue& v = inst.features[f];
      const AttributeSpec& attr = schema_->attributes[f];
      const bool ok =
          v.is_missing() ||
          (v.is_numeric() && !attr.is_nominal() &&
           !std::isnan(v.as_numeric())) ||
          (v.is_nominal() && attr.is_nominal() &&
           v.as_nominal() < attr.values.size());
      if (!ok) {
        throw InvalidParameterError("instance " + std::to_string(i) +
                                    " has an invalid value for attribute '" +
                                    attr.name + "'");
      }
    }
  }
}

MultiLabelDataset MultiLabelDataset::with_instances(
    std::vector<Instance> instances) const {
  return MultiLabelDataset(name_, schema_, std::move(instances));
}

MultiLabelDataset MultiLabelDataset::subset(
    std::span<const std::size_t> rows) const {
  std::vector<Instance> picked;
  picked.reserve(rows.size());
  for (std::size_t r : rows) picked.push_back(instances_.at(r));
  return with_instances(std::move(picked));
}

bool operator==(const MultiLabelDataset& a, const MultiLabelDataset& b) {
  return a.name_ == b.name_ && *a.schema_ == *b.schema_ &&
         a.instances_ == b.instances_;
}

}  // namespace mlbalance

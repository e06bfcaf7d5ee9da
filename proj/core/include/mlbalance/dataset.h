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

#ifndef MLBALANCE_DATASET_H_
#define MLBALANCE_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace mlbalance {

// One cell of a feature vector: a real number, an index into the owning
// nominal attribute's value list, or missing (`?` in ARFF).
class FeatureValue {
 public:
  enum class Kind : std::uint8_t { kMissing, kNumeric, kNominal };

  FeatureValue() = default;

  static FeatureValue missing() { return FeatureValue(); }
  static FeatureValue numeric(double value) {
    FeatureValue v;
    v.kind_ = Kind::kNumeric;
    v.numeric_ = value;
    return v;
  }
  static FeatureValue nominal(std::uint32_t index) {
    FeatureValue v;
    v.kind_ = Kind::kNominal;
    v.nominal_ = index;
    return v;
  }

  Kind kind() const { return kind_; }
  bool is_missing() const { return kind_ == Kind::kMissing; }
  bool is_numeric() const { return kind_ == Kind::kNumeric; }
  bool is_nominal() const { return kind_ == Kind::kNominal; }

  double as_numeric() const { return numeric_; }
  std::uint32_t as_nominal() const { return nominal_; }

  friend bool operator==(const FeatureValue&, const FeatureValue&) = default;

 private:
  Kind kind_ = Kind::kMissing;
  std::uint32_t nominal_ = 0;
  double numeric_ = 0.0;
};

struct AttributeSpec {
  enum class Kind : std::uint8_t { kNumeric, kNominal };

  std::string name;
  Kind kind = Kind::kNumeric;
  // Declared symbols, only for nominal attributes.
  std::vector<std::string> values;

  static AttributeSpec numeric(std::string name) {
    return AttributeSpec{std::move(name), Kind::kNumeric, {}};
  }
  static AttributeSpec nominal(std::string name,
                               std::vector<std::string> values) {
    return AttributeSpec{std::move(name), Kind::kNominal, std::move(values)};
  }

  bool is_nominal() const { return kind == Kind::kNominal; }

  friend bool operator==(const AttributeSpec&, const AttributeSpec&) = default;
};

// Set of active label indices over a fixed label universe of size k, stored
// as a packed bitset.
class Labelset {
 public:
  Labelset() = default;
  explicit Labelset(std::size_t num_labels);
  Labelset(std::size_t num_labels, std::initializer_list<std::size_t> active);
  Labelset(std::size_t num_labels, std::span<const std::size_t> active);

  std::size_t num_labels() const { return num_labels_; }

  bool contains(std::size_t label) const {
    return (words_[label / 64] >> (label % 64)) & 1u;
  }
  void set(std::size_t label, bool active = true);

  // Number of active labels.
  std::size_t count() const;
  bool empty() const;

  // Active labels in increasing order.
  std::vector<std::size_t> indices() const;

  std::size_t intersection_count(const Labelset& other) const;
  std::size_t union_count(const Labelset& other) const;
  std::size_t symmetric_difference_count(const Labelset& other) const;

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const Labelset&, const Labelset&) = default;
  friend auto operator<=>(const Labelset& a, const Labelset& b) {
    return a.words_ <=> b.words_;
  }

 private:
  std::size_t num_labels_ = 0;
  std::vector<std::uint64_t> words_;
};

struct LabelsetHash {
  std::size_t operator()(const Labelset& labels) const;
};

struct Instance {
  std::vector<FeatureValue> features;
  Labelset labels;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Feature attributes and label names of a dataset.
struct Schema {
  std::vector<AttributeSpec> attributes;
  std::vector<std::string> label_names;

  std::size_t num_features() const { return attributes.size(); }
  std::size_t num_labels() const { return label_names.size(); }

  // Throws InvalidParameterError when names collide or a nominal list is
  // empty or has duplicates.
  void validate() const;

  friend bool operator==(const Schema&, const Schema&) = default;
};

// Multilabel dataset D: n instances over a shared schema. Immutable once
// built; transformations produce new datasets that share the schema.
class MultiLabelDataset {
 public:
  // Validates the schema and every instance against it; throws
  // InvalidParameterError on violation.
  MultiLabelDataset(std::string name, Schema schema,
                    std::vector<Instance> instances);
  MultiLabelDataset(std::string name, std::shared_ptr<const Schema> schema,
                    std::vector<Instance> instances);

  const std::string& name() const { return name_; }
  const Schema& schema() const { return *schema_; }
  const std::shared_ptr<const Schema>& shared_schema() const {
    return schema_;
  }
  std::span<const AttributeSpec> attributes() const {
    return schema_->attributes;
  }
  std::span<const std::string> label_names() const {
    return schema_->label_names;
  }
  std::span<const Instance> instances() const { return instances_; }
  const Instance& instance(std::size_t i) const { return instances_[i]; }

  std::size_t num_instances() const { return instances_.size(); }
  std::size_t num_features() const { return schema_->num_features(); }
  std::size_t num_labels() const { return schema_->num_labels(); }

  // Same name and schema, different rows.
  MultiLabelDataset with_instances(std::vector<Instance> instances) const;
  // Rows selected by index, in the given order.
  MultiLabelDataset subset(std::span<const std::size_t> rows) const;

  friend bool operator==(const MultiLabelDataset& a,
                         const MultiLabelDataset& b);

 private:
  void validate_instances() const;

  std::string name_;
  std::shared_ptr<const Schema> schema_;
  std::vector<Instance> instances_;
};

}  // namespace mlbalance

#endif  // MLBALANCE_DATASET_H_

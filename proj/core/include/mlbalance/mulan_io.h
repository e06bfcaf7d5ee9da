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

#ifndef MLBALANCE_MULAN_IO_H_
#define MLBALANCE_MULAN_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mlbalance/dataset.h"

namespace mlbalance {

struct MulanText {
  std::string arff;
  std::string xml;
};

// Parses a MULAN dataset: an ARFF file (dense or sparse rows) plus the XML
// label header naming which ARFF attributes are labels.
//
// Labels come out in XML order; the remaining attributes become features in
// declaration order. Sparse rows leave absent numeric cells at 0, absent
// nominal cells at the first declared value and absent labels inactive.
// Throws ParseError with the offending line number.
MultiLabelDataset parse_mulan(std::string_view arff_text,
                              std::string_view xml_label_header);

// Serializes to dense ARFF (features first, then labels as {0,1}) and an XML
// header. parse_mulan(write_mulan(d)) == d.
MulanText write_mulan(const MultiLabelDataset& dataset);

// Label names in document order, nested <label> elements flattened.
std::vector<std::string> parse_label_header(std::string_view xml);

MultiLabelDataset load_mulan(const std::filesystem::path& arff_path,
                             const std::filesystem::path& xml_path);
void save_mulan(const MultiLabelDataset& dataset,
                const std::filesystem::path& arff_path,
                const std::filesystem::path& xml_path);

// `<stem>.xml` next to an ARFF file, the usual MULAN pairing.
std::filesystem::path default_label_header_path(
    const std::filesystem::path& arff_path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     std::string_view contents);

// Shortest decimal text that parses back to exactly `value`.
std::string format_real(double value);

}  // namespace mlbalance

#endif  // MLBALANCE_MULAN_IO_H_

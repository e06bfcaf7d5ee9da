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

#include "mlbalance/mulan_io.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "fixtures.h"
#include "mlbalance/error.h"

namespace mlbalance {
namespace {

constexpr const char* kXml =
    "<?xml version=\"1.0\"?>\n"
    "<labels xmlns=\"http://mulan.sourceforge.net/labels\">\n"
    "  <label name=\"l0\"/>\n  <label name=\"l1\"/>\n</labels>\n";

constexpr const char* kDense =
    "% two rows\n"
    "@relation demo\n"
    "@attribute size numeric\n"
    "@attribute colour {red,blue}\n"
    "@attribute l0 {0,1}\n"
    "@attribute l1 {0,1}\n"
    "@data\n"
    "1.0,red,1,0\n"
    "2.0,blue,0,1\n";

TEST(MulanIoTest, ParsesDenseRows) {
  const MultiLabelDataset d = parse_mulan(kDense, kXml);
  EXPECT_EQ(d.name(), "demo");
  ASSERT_EQ(d.num_instances(), 2u);
  EXPECT_EQ(d.num_labels(), 2u);
  EXPECT_EQ(d.num_features(), 2u);
  EXPECT_EQ(d.instance(0).labels, Labelset(2, {0}));
  EXPECT_EQ(d.instance(1).features[1], FeatureValue::nominal(1));
  EXPECT_EQ(d.instance(1).features[0], FeatureValue::numeric(2.0));
}

TEST(MulanIoTest, ParsesSparseRows) {
  const std::string arff =
      "@RELATION s\n"
      "@ATTRIBUTE a NUMERIC\n"
      "@ATTRIBUTE b {x,y}\n"
      "@ATTRIBUTE l0 {0,1}\n"
      "@ATTRIBUTE l1 {0,1}\n"
      "@DATA\n"
      "{0 3.5, 3 1}\n";
  const MultiLabelDataset d = parse_mulan(arff, kXml);
  ASSERT_EQ(d.num_instances(), 1u);
  EXPECT_EQ(d.instance(0).features[0], FeatureValue::numeric(3.5));
  EXPECT_EQ(d.instance(0).features[1], FeatureValue::nominal(0));
  EXPECT_EQ(d.instance(0).labels, Labelset(2, {1}));
}

TEST(MulanIoTest, LabelColumnsMayPrecedeFeatures) {
  const std::string arff =
      "@relation r\n@attribute l1 {0,1}\n@attribute x real\n"
      "@attribute l0 {0,1}\n@data\n1,0.5,0\n";
  const MultiLabelDataset d = parse_mulan(arff, kXml);
  EXPECT_EQ(d.label_names()[0], "l0");
  EXPECT_EQ(d.instance(0).labels, Labelset(2, {1}));
  EXPECT_EQ(d.instance(0).features[0], FeatureValue::numeric(0.5));
}

TEST(MulanIoTest, MissingValues) {
  const std::string arff =
      "@relation r\n@attribute x numeric\n@attribute l0 {0,1}\n"
      "@attribute l1 {0,1}\n@data\n?,1,1\n";
  const MultiLabelDataset d = parse_mulan(arff, kXml);
  EXPECT_TRUE(d.instance(0).features[0].is_missing());
}

TEST(MulanIoTest, UnknownXmlLabelIsNamed) {
  const std::string xml =
      "<labels xmlns=\"http://mulan.sourceforge.net/labels\">"
      "<label name=\"l0\"/><label name=\"q\"/></labels>";
  try {
    parse_mulan(kDense, xml);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("'q'"), std::string::npos) << e.what();
  }
}

TEST(MulanIoTest, MalformedRowReportsLine) {
  const std::string arff =
      "@relation r\n@attribute x numeric\n@attribute l0 {0,1}\n"
      "@attribute l1 {0,1}\n@data\n1,0,1\n1,0\n";
  try {
    parse_mulan(arff, kXml);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 7u);
  }
}

TEST(MulanIoTest, RejectsNonBinaryLabel) {
  const std::string arff =
      "@relation r\n@attribute x numeric\n@attribute l0 numeric\n"
      "@attribute l1 {0,1}\n@data\n1,2,1\n";
  EXPECT_THROW(parse_mulan(arff, kXml), ParseError);
}

TEST(MulanIoTest, RejectsUndeclaredNominal) {
  const std::string arff =
      "@relation r\n@attribute c {u,v}\n@attribute l0 {0,1}\n"
      "@attribute l1 {0,1}\n@data\nw,0,1\n";
  EXPECT_THROW(parse_mulan(arff, kXml), ParseError);
}

TEST(MulanIoTest, NestedLabelsAreFlattened) {
  const std::string xml =
      "<labels><label name=\"a\"><label name=\"b\"/></label>"
      "<label name=\"c\"></label></labels>";
  EXPECT_EQ(parse_label_header(xml), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_THROW(parse_label_header("<foo/>"), ParseError);
}

TEST(MulanIoTest, WriteThenParseIsIdentity) {
  const MultiLabelDataset d = parse_mulan(kDense, kXml);
  const MulanText text = write_mulan(d);
  EXPECT_EQ(parse_mulan(text.arff, text.xml), d);
}

TEST(MulanIoTest, EmptyLabelsetAndMissingRoundTrip) {
  Schema schema{{AttributeSpec::numeric("x"),
                 AttributeSpec::nominal("odd name", {"a b", "c,d"})},
                {"l'0", "l1"}};
  std::vector<Instance> rows{
      {{FeatureValue::missing(), FeatureValue::nominal(1)}, Labelset(2)},
      {{FeatureValue::numeric(0.1), FeatureValue::missing()}, Labelset(2, {0, 1})}};
  const MultiLabelDataset d("weird rel", schema, rows);
  const MulanText text = write_mulan(d);
  EXPECT_NE(text.arff.find('?'), std::string::npos);
  const MultiLabelDataset back = parse_mulan(text.arff, text.xml);
  EXPECT_EQ(back, d);
  EXPECT_TRUE(back.instance(0).labels.empty());
}

TEST(MulanIoTest, RoundTripProperty) {
  std::mt19937_64 gen(11);
  testing::RandomSpec spec;
  spec.missing_rate = 0.1;
  spec.some_label = false;
  spec.min_instances = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const MultiLabelDataset d = testing::random_dataset(gen, spec);
    const MulanText text = write_mulan(d);
    ASSERT_EQ(parse_mulan(text.arff, text.xml), d) << text.arff;
  }
}

TEST(MulanIoTest, FilesAndErrors) {
  const auto dir = std::filesystem::temp_directory_path() / "mlbalance_io_test";
  std::filesystem::create_directories(dir);
  const MultiLabelDataset d = testing::toy6();
  save_mulan(d, dir / "toy.arff", dir / "toy.xml");
  EXPECT_EQ(default_label_header_path(dir / "toy.arff"), dir / "toy.xml");
  EXPECT_EQ(load_mulan(dir / "toy.arff", dir / "toy.xml"), d);
  EXPECT_THROW(load_mulan(dir / "nope.arff", dir / "toy.xml"), IoError);
  EXPECT_THROW(load_mulan(dir / "toy.arff", dir / "nope.xml"), IoError);
  std::filesystem::remove_all(dir);
}

TEST(MulanIoTest, FormatRealRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 1e21, 0.0}) {
    EXPECT_EQ(std::stod(format_real(v)), v);
  }
  EXPECT_EQ(format_real(0.5), "0.5");
}

}  // namespace
}  // namespace mlbalance

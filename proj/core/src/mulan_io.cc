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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "mlbalance/error.h"

namespace mlbalance {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

bool starts_with_keyword(std::string_view line, std::string_view keyword) {
  if (line.size() < keyword.size()) return false;
  if (lower(line.substr(0, keyword.size())) != keyword) return false;
  return line.size() == keyword.size() || is_space(line[keyword.size()]);
}

struct Token {
  std::string text;
  bool quoted = false;
};

// Character cursor over one ARFF line.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void advance() { ++pos_; }
  std::string_view rest() const { return text_.substr(pos_); }

  void expect(char c) {
    skip_space();
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", line_);
    }
    ++pos_;
  }

  // A quoted string, or the unquoted run up to whitespace or any stop char.
  Token read_token(std::string_view stops, bool stop_at_space) {
    skip_space();
    Token tok;
    if (peek() == '\'' || peek() == '"') {
      const char quote = peek();
      ++pos_;
      tok.quoted = true;
      while (true) {
        if (pos_ >= text_.size()) throw ParseError("unterminated quote", line_);
        char c = text_[pos_++];
        if (c == '\\' && pos_ < text_.size()) {
          tok.text.push_back(text_[pos_++]);
        } else if (c == quote) {
          break;
        } else {
          tok.text.push_back(c);
        }
      }
      return tok;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (stops.find(c) != std::string_view::npos) break;
      if (stop_at_space && is_space(c)) break;
      ++pos_;
    }
    tok.text = std::string(trim(text_.substr(start, pos_ - start)));
    return tok;
  }

  std::size_t line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

// Comma-separated tokens up to `close` (or end of line when close == '\0').
std::vector<Token> read_list(Cursor& cur, char close) {
  std::vector<Token> out;
  const std::string stops = close == '\0' ? std::string(",")
                                          : std::string(",") + close;
  if (close != '\0') {
    cur.skip_space();
    if (cur.peek() == close) {
      cur.advance();
      return out;
    }
  }
  while (true) {
    Token tok = cur.read_token(stops, false);
    if (!tok.quoted && tok.text.empty()) {
      throw ParseError("empty value", cur.line());
    }
    out.push_back(std::move(tok));
    cur.skip_space();
    const char c = cur.peek();
    if (c == ',') {
      cur.advance();
      continue;
    }
    if (close != '\0' && c == close) {
      cur.advance();
      break;
    }
    if (close == '\0' && c == '\0') break;
    throw ParseError("unexpected character '" + std::string(1, c) + "'",
                     cur.line());
  }
  return out;
}

std::optional<double> parse_double(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || std::isnan(value)) {
    return std::nullopt;
  }
  return value;
}

struct ArffAttribute {
  AttributeSpec spec;
  std::unordered_map<std::string, std::uint32_t> symbol_index;
};

// Where each ARFF column lands in the dataset.
struct ColumnTarget {
  bool is_label = false;
  std::size_t index = 0;  // feature index or label index
};

std::string decode_xml_entities(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '&') {
      out.push_back(s[i]);
      continue;
    }
    const std::size_t semi = s.find(';', i);
    if (semi == std::string_view::npos) {
      out.push_back('&');
      continue;
    }
    const std::string_view ent = s.substr(i + 1, semi - i - 1);
    if (ent == "amp") {
      out.push_back('&');
    } else if (ent == "lt") {
      out.push_back('<');
    } else if (ent == "gt") {
      out.push_back('>');
    } else if (ent == "quot") {
      out.push_back('"');
    } else if (ent == "apos") {
      out.push_back('\'');
    } else if (!ent.empty() && ent[0] == '#') {
      const bool hex = ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X');
      unsigned code = 0;
      const std::string_view digits = ent.substr(hex ? 2 : 1);
      std::from_chars(digits.data(), digits.data() + digits.size(), code,
                      hex ? 16 : 10);
      if (code < 0x80) {
        out.push_back(static_cast<char>(code));
      } else if (code < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (code >> 6)));
        out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
      } else {
        out.push_back(static_cast<char>(0xE0 | (code >> 12)));
        out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
      }
    } else {
      out.append(s.substr(i, semi - i + 1));
    }
    i = semi;
  }
  return out;
}

std::string escape_xml(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string quote_arff(std::string_view s) {
  const bool needs_quotes =
      s.empty() || s == "?" ||
      s.find_first_of(" \t\r\n,{}'\"%\\") != std::string_view::npos;
  if (!needs_quotes) return std::string(s);
  std::string out = "'";
  for (char c : s) {
    if (c == '\'' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('\'');
  return out;
}

}  // namespace

std::string format_real(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::vector<std::string> parse_label_header(std::string_view xml) {
  std::vector<std::string> labels;
  bool saw_root = false;
  std::size_t pos = 0;
  while ((pos = xml.find('<', pos)) != std::string_view::npos) {
    if (xml.substr(pos, 4) == "<!--") {
      const std::size_t end = xml.find("-->", pos);
      if (end == std::string_view::npos) {
        throw ParseError("unterminated XML comment");
      }
      pos = end + 3;
      continue;
    }
    const std::size_t close = xml.find('>', pos);
    if (close == std::string_view::npos) {
      throw ParseError("unterminated XML tag");
    }
    const std::string_view tag = xml.substr(pos + 1, close - pos - 1);
    pos = close + 1;

    std::size_t name_end = 0;
    while (name_end < tag.size() && !is_space(tag[name_end]) &&
           tag[name_end] != '/') {
      ++name_end;
    }
    const std::string_view element = tag.substr(0, name_end);
    if (element == "labels") {
      saw_root = true;
      continue;
    }
    if (element != "label") continue;

    // Find name="..." among the tag's attributes.
    std::optional<std::string> name;
    std::size_t a = name_end;
    while (a < tag.size()) {
      while (a < tag.size() && (is_space(tag[a]) || tag[a] == '/')) ++a;
      const std::size_t key_start = a;
      while (a < tag.size() && tag[a] != '=' && !is_space(tag[a])) ++a;
      const std::string_view key = tag.substr(key_start, a - key_start);
      while (a < tag.size() && is_space(tag[a])) ++a;
      if (a >= tag.size() || tag[a] != '=') break;
      ++a;
      while (a < tag.size() && is_space(tag[a])) ++a;
      if (a >= tag.size() || (tag[a] != '"' && tag[a] != '\'')) {
        throw ParseError("malformed attribute in <label> tag");
      }
      const char quote = tag[a++];
      const std::size_t value_end = tag.find(quote, a);
      if (value_end == std::string_view::npos) {
        throw ParseError("unterminated attribute value in <label> tag");
      }
      if (key == "name") {
        name = decode_xml_entities(tag.substr(a, value_end - a));
      }
      a = value_end + 1;
    }
    if (!name) throw ParseError("<label> element without a name attribute");
    labels.push_back(*std::move(name));
  }
  if (!saw_root) throw ParseError("XML label header has no <labels> element");
  if (labels.empty()) throw ParseError("XML label header declares no labels");
  return labels;
}

MultiLabelDataset parse_mulan(std::string_view arff_text,
                              std::string_view xml_label_header) {
  const std::vector<std::string> xml_labels =
      parse_label_header(xml_label_header);

  std::string relation;
  std::vector<ArffAttribute> columns;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool in_data = false;
  std::vector<ColumnTarget> targets;
  std::optional<Schema> schema;
  std::vector<Instance> instances;

  auto finish_header = [&]() {
    std::unordered_map<std::string, std::size_t> column_by_name;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (!column_by_name.emplace(columns[c].spec.name, c).second) {
        throw ParseError("duplicate attribute '" + columns[c].spec.name + "'",
                         line_no);
      }
    }
    targets.assign(columns.size(), ColumnTarget{});
    std::vector<bool> is_label(columns.size(), false);
    std::unordered_set<std::string> seen_labels;
    for (std::size_t l = 0; l < xml_labels.size(); ++l) {
      auto it = column_by_name.find(xml_labels[l]);
      if (it == column_by_name.end()) {
        throw ParseError("label '" + xml_labels[l] +
                         "' declared in XML header is not an ARFF attribute");
      }
      if (!seen_labels.insert(xml_labels[l]).second) {
        throw ParseError("label '" + xml_labels[l] +
                         "' declared twice in XML header");
      }
      is_label[it->second] = true;
      targets[it->second] = ColumnTarget{true, l};
    }
    Schema s;
    s.label_names = xml_labels;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (is_label[c]) continue;
      targets[c] = ColumnTarget{false, s.attributes.size()};
      s.attributes.push_back(columns[c].spec);
    }
    schema = std::move(s);
  };

  auto convert = [&](std::size_t column, const Token& tok, Instance& inst) {
    const ArffAttribute& col = columns[column];
    const ColumnTarget& target = targets[column];
    if (target.is_label) {
      bool active = false;
      if (!tok.quoted && tok.text == "?") {
        throw ParseError("missing value in label column '" + col.spec.name +
                             "'",
                         line_no);
      }
      if (tok.text == "1") {
        active = true;
      } else if (tok.text == "0") {
        active = false;
      } else {
        std::optional<double> v =
            col.spec.is_nominal() ? std::nullopt : parse_double(tok.text);
        if (!v || (*v != 0.0 && *v != 1.0)) {
          throw ParseError("non-binary value '" + tok.text +
                               "' in label column '" + col.spec.name + "'",
                           line_no);
        }
        active = *v == 1.0;
      }
      if (active) inst.labels.set(target.index);
      return;
    }
    FeatureValue& cell = inst.features[target.index];
    if (!tok.quoted && tok.text == "?") {
      cell = FeatureValue::missing();
      return;
    }
    if (col.spec.is_nominal()) {
      auto it = col.symbol_index.find(tok.text);
      if (it == col.symbol_index.end()) {
        throw ParseError("value '" + tok.text +
                             "' not declared for nominal attribute '" +
                             col.spec.name + "'",
                         line_no);
      }
      cell = FeatureValue::nominal(it->second);
    } else {
      std::optional<double> v = parse_double(tok.text);
      if (!v) {
        throw ParseError("invalid numeric value '" + tok.text +
                             "' for attribute '" + col.spec.name + "'",
                         line_no);
      }
      cell = FeatureValue::numeric(*v);
    }
  };

  auto blank_instance = [&]() {
    Instance inst;
    inst.features.reserve(schema->attributes.size());
    for (const AttributeSpec& attr : schema->attributes) {
      inst.features.push_back(attr.is_nominal() ? FeatureValue::nominal(0)
                                                : FeatureValue::numeric(0.0));
    }
    inst.labels = Labelset(schema->label_names.size());
    return inst;
  };

  while (pos <= arff_text.size()) {
    std::size_t eol = arff_text.find('\n', pos);
    if (eol == std::string_view::npos) eol = arff_text.size();
    const std::string_view raw = arff_text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '%') continue;

    if (!in_data) {
      if (line.front() != '@') {
        throw ParseError("expected an @-directive in ARFF header", line_no);
      }
      if (starts_with_keyword(line, "@relation")) {
        Cursor cur(line.substr(9), line_no);
        cur.skip_space();
        Token tok = cur.read_token("", false);
        relation = tok.text;
      } else if (starts_with_keyword(line, "@attribute")) {
        Cursor cur(line.substr(10), line_no);
        Token name = cur.read_token("{", true);
        if (name.text.empty()) {
          throw ParseError("attribute without a name", line_no);
        }
        cur.skip_space();
        ArffAttribute attr;
        attr.spec.name = name.text;
        if (cur.peek() == '{') {
          cur.advance();
          std::vector<Token> values = read_list(cur, '}');
          if (values.empty()) {
            throw ParseError("nominal attribute '" + name.text +
                                 "' declares no values",
                             line_no);
          }
          attr.spec.kind = AttributeSpec::Kind::kNominal;
          for (Token& v : values) {
            const auto index = static_cast<std::uint32_t>(
                attr.spec.values.size());
            if (!attr.symbol_index.emplace(v.text, index).second) {
              throw ParseError("nominal attribute '" + name.text +
                                   "' repeats value '" + v.text + "'",
                               line_no);
            }
            attr.spec.values.push_back(std::move(v.text));
          }
        } else {
          const std::string type = lower(trim(cur.rest()));
          if (type == "numeric" || type == "real" || type == "integer") {
            attr.spec.kind = AttributeSpec::Kind::kNumeric;
          } else {
            throw ParseError("unsupported attribute type '" +
                                 std::string(trim(cur.rest())) +
                                 "' for attribute '" + name.text + "'",
                             line_no);
          }
        }
        columns.push_back(std::move(attr));
      } else if (starts_with_keyword(line, "@data")) {
        in_data = true;
        finish_header();
      } else {
        throw ParseError("unknown directive '" + std::string(line) + "'",
                         line_no);
      }
      continue;
    }

    Instance inst = blank_instance();
    Cursor cur(line, line_no);
    if (line.front() == '{') {
      cur.advance();
      cur.skip_space();
      std::vector<bool> seen(columns.size(), false);
      if (cur.peek() == '}') {
        cur.advance();
      } else {
        while (true) {
          Token index_tok = cur.read_token(",}", true);
          std::size_t column = 0;
          auto [ptr, ec] = std::from_chars(
              index_tok.text.data(),
              index_tok.text.data() + index_tok.text.size(), column);
          if (index_tok.quoted || ec != std::errc() ||
              ptr != index_tok.text.data() + index_tok.text.size()) {
            throw ParseError("invalid sparse index '" + index_tok.text + "'",
                             line_no);
          }
          if (column >= columns.size()) {
            throw ParseError("sparse index " + std::to_string(column) +
                                 " out of range",
                             line_no);
          }
          if (seen[column]) {
            throw ParseError("sparse index " + std::to_string(column) +
                                 " repeated",
                             line_no);
          }
          seen[column] = true;
          Token value = cur.read_token(",}", false);
          if (!value.quoted && value.text.empty()) {
            throw ParseError("sparse index " + std::to_string(column) +
                                 " has no value",
                             line_no);
          }
          convert(column, value, inst);
          cur.skip_space();
          if (cur.peek() == ',') {
            cur.advance();
            continue;
          }
          cur.expect('}');
          break;
        }
      }
      if (!cur.at_end()) {
        throw ParseError("trailing content after sparse row", line_no);
      }
    } else {
      std::vector<Token> values = read_list(cur, '\0');
      if (values.size() != columns.size()) {
        throw ParseError("row has " + std::to_string(values.size()) +
                             " values, expected " +
                             std::to_string(columns.size()),
                         line_no);
      }
      for (std::size_t c = 0; c < values.size(); ++c) {
        convert(c, values[c], inst);
      }
    }
    instances.push_back(std::move(inst));
  }

  if (!in_data) throw ParseError("ARFF text has no @data section", line_no);

  try {
    return MultiLabelDataset(std::move(relation), std::move(*schema),
                             std::move(instances));
  } catch (const InvalidParameterError& e) {
    throw ParseError(e.what());
  }
}

MulanText write_mulan(const MultiLabelDataset& dataset) {
  std::ostringstream arff;
  arff << "@relation " << quote_arff(dataset.name()) << "\n\n";
  for (const AttributeSpec& attr : dataset.attributes()) {
    arff << "@attribute " << quote_arff(attr.name) << ' ';
    if (attr.is_nominal()) {
      arff << '{';
      for (std::size_t v = 0; v < attr.values.size(); ++v) {
        if (v > 0) arff << ',';
        arff << quote_arff(attr.values[v]);
      }
      arff << "}\n";
    } else {
      arff << "numeric\n";
    }
  }
  for (const std::string& label : dataset.label_names()) {
    arff << "@attribute " << quote_arff(label) << " {0,1}\n";
  }
  arff << "\n@data\n";

  std::string row;
  for (const Instance& inst : dataset.instances()) {
    row.clear();
    for (std::size_t f = 0; f < inst.features.size(); ++f) {
      if (f > 0) row.push_back(',');
      const FeatureValue& v = inst.features[f];
      if (v.is_missing()) {
        row.push_back('?');
      } else if (v.is_nominal()) {
        row += quote_arff(dataset.attributes()[f].values[v.as_nominal()]);
      } else {
        row += format_real(v.as_numeric());
      }
    }
    for (std::size_t l = 0; l < dataset.num_labels(); ++l) {
      if (!row.empty() || l > 0) row.push_back(',');
      row.push_back(inst.labels.contains(l) ? '1' : '0');
    }
    arff << row << '\n';
  }

  std::ostringstream xml;
  xml << "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n"
      << "<labels xmlns=\"http://mulan.sourceforge.net/labels\">\n";
  for (const std::string& label : dataset.label_names()) {
    xml << "<label name=\"" << escape_xml(label) << "\"/>\n";
  }
  xml << "</labels>\n";
  return MulanText{arff.str(), xml.str()};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return buf.str();
}

void write_text_file(const std::filesystem::path& path,
                     std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

MultiLabelDataset load_mulan(const std::filesystem::path& arff_path,
                             const std::filesystem::path& xml_path) {
  const std::string arff = read_text_file(arff_path);
  const std::string xml = read_text_file(xml_path);
  try {
    return parse_mulan(arff, xml);
  } catch (const ParseError& e) {
    throw ParseError(arff_path.string() + ": " + e.what());
  }
}

void save_mulan(const MultiLabelDataset& dataset,
                const std::filesystem::path& arff_path,
                const std::filesystem::path& xml_path) {
  const MulanText text = write_mulan(dataset);
  write_text_file(arff_path, text.arff);
  write_text_file(xml_path, text.xml);
}

std::filesystem::path default_label_header_path(
    const std::filesystem::path& arff_path) {
  std::filesystem::path xml = arff_path;
  xml.replace_extension(".xml");
  return xml;
}

}  // namespace mlbalance

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

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mlbalance/error.h"
#include "mlbalance/evaluation.h"
#include "mlbalance/imbalance.h"
#include "mlbalance/mlknn.h"
#include "mlbalance/mulan_io.h"
#include "mlbalance/partition.h"
#include "mlbalance/remedial.h"
#include "mlbalance/resample.h"
#include "mlbalance/serialization.h"

namespace mlbalance::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

// A report contradicted its own bookkeeping.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

struct Manifest {
  std::string command;
  std::vector<std::string> argv;
  Json parameters = Json::object();
  std::optional<std::uint64_t> seed;
  Json inputs = Json::object();
  Json outputs = Json::object();
  std::optional<std::string> profile_before_digest;
  std::optional<std::string> profile_after_digest;

  std::string to_json() const {
    Json j;
    j["tool"] = "mlbalance";
    j["version"] = kToolVersion;
    j["command"] = command;
    j["argv"] = argv;
    j["parameters"] = parameters;
    if (seed) {
      j["seed"] = *seed;
    } else {
      j["seed"] = nullptr;
    }
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    j["profile_before_digest"] =
        profile_before_digest ? Json(*profile_before_digest) : Json(nullptr);
    j["profile_after_digest"] =
        profile_after_digest ? Json(*profile_after_digest) : Json(nullptr);
    return j.dump(2) + "\n";
  }
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  const char* env = std::getenv(kSeedEnvVar);
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t value = 0;
  const std::string_view text(env);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidParameterError(std::string(kSeedEnvVar) +
                                " is not an unsigned integer: '" + env + "'");
  }
  return value;
}

fs::path header_path(const std::string& arff, const std::string& xml) {
  return xml.empty() ? default_label_header_path(arff) : fs::path(xml);
}

fs::path with_suffix(const fs::path& stem, std::string_view suffix) {
  return fs::path(stem.string() + std::string(suffix));
}

void ensure_parent(const fs::path& path) {
  const fs::path parent = path.parent_path();
  if (parent.empty()) return;
  std::error_code ec;
  fs::create_directories(parent, ec);
  if (ec) {
    throw IoError("cannot create directory '" + parent.string() +
                  "': " + ec.message());
  }
}

void warn_zero_count_labels(const MultiLabelDataset& dataset,
                            const ImbalanceProfile& p, std::ostream& err) {
  for (std::size_t l : p.zero_count_labels()) {
    err << "warning: label '" << dataset.label_names()[l]
        << "' never occurs; its IRLbl is undefined and excluded from MeanIR\n";
  }
}

std::string fixed(double value, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << value;
  return s.str();
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      if (c == 0) {
        out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      } else {
        out << std::right << std::setw(static_cast<int>(width[c])) << row[c];
      }
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
}

std::vector<std::string> profile_row(const std::string& name,
                                     const ImbalanceProfile& p) {
  return {name,
          std::to_string(p.instances),
          std::to_string(p.features),
          std::to_string(p.labels),
          std::to_string(p.distinct_labelsets),
          fixed(p.card),
          fixed(p.dens),
          fixed(p.mean_ir),
          fixed(p.scumble),
          fixed(p.tcs)};
}

const std::vector<std::string> kProfileHeader = {
    "Dataset", "Inst.", "Attr.",   "Labels",  "LSet",
    "Card",    "Dens",  "MeanIR", "SCUMBLE", "TCS"};

void check_report(const ResampleReport& report) {
  for (const StageReport& stage : report.stages) {
    if (stage.instances_after + stage.removed.size() !=
        stage.instances_before + stage.added.size()) {
      throw InvariantViolation("stage '" + stage.method +
                               "' instance counts do not balance");
    }
  }
}

// --- commands ---------------------------------------------------------------

struct InfoArgs {
  std::string dataset;
  std::string xml;
  std::string json;
};

int cmd_info(const InfoArgs& a, const std::vector<std::string>& argv,
             std::ostream& out, std::ostream& err) {
  const fs::path xml = header_path(a.dataset, a.xml);
  const MultiLabelDataset dataset = load_mulan(a.dataset, xml);
  const ImbalanceProfile p = profile(dataset);
  warn_zero_count_labels(dataset, p, err);
  print_table(out, kProfileHeader,
              {profile_row(fs::path(a.dataset).stem().string(), p)});
  if (!a.json.empty()) {
    const std::string json = profile_to_json(p);
    const fs::path path(a.json);
    ensure_parent(path);
    write_text_file(path, json);
    Manifest m;
    m.command = "info";
    m.argv = argv;
    m.inputs["dataset"] = a.dataset;
    m.inputs["xml"] = xml.string();
    m.outputs["profile"] = path.string();
    m.profile_before_digest = digest(json);
    write_text_file(fs::path(path).replace_extension(".manifest.json"),
                    m.to_json());
  }
  return kExitOk;
}

struct ResampleArgs {
  std::string dataset;
  std::string xml;
  std::string method;
  double percentage = 25.0;
  double threshold = 0.75;
  std::size_t nn = 3;
  std::size_t k = 5;
  std::string remedial;
  bool drop_empty = false;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int cmd_resample(const ResampleArgs& a, const std::vector<std::string>& argv,
                 std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = resolve_seed(a.seed);
  ResampleMethod method;
  Json params;
  params["method"] = a.method;
  if (a.method == "mlros") {
    method = MlRosParams{a.percentage};
    params["p"] = a.percentage;
  } else if (a.method == "mlenn") {
    method = MlennParams{a.threshold, a.nn};
    params["ht"] = a.threshold;
    params["nn"] = a.nn;
  } else if (a.method == "mlsmote") {
    method = MlsmoteParams{a.k};
    params["k"] = a.k;
  } else {
    throw InvalidParameterError("unknown method '" + a.method +
                                "' (expected mlros, mlenn or mlsmote)");
  }
  std::optional<DecoupleConfig> decouple;
  if (!a.remedial.empty()) {
    decouple = DecoupleConfig::parse(a.remedial);
    decouple->drop_empty = a.drop_empty;
    params["remedial"] = decouple->to_string();
    params["drop_empty"] = a.drop_empty;
  } else if (a.drop_empty) {
    throw InvalidParameterError("--drop-empty only applies with --remedial");
  }
  params["seed"] = seed;

  const fs::path xml = header_path(a.dataset, a.xml);
  const MultiLabelDataset dataset = load_mulan(a.dataset, xml);
  const ResampleConfig config{method, seed};
  // Neighbor bounds are checked against the set the resampler will see; the
  // decoupled set is at least as large as the input.
  validate(config, dataset.num_instances());

  ResampleResult result =
      decouple ? hybrid_resample(dataset, HybridConfig{*decouple, config})
               : resample(dataset, config);
  check_report(result.report);

  const fs::path stem(a.out);
  ensure_parent(stem);
  const fs::path arff_out = with_suffix(stem, ".arff");
  const fs::path xml_out = with_suffix(stem, ".xml");
  const fs::path report_out = with_suffix(stem, ".report.json");
  save_mulan(result.dataset, arff_out, xml_out);
  write_text_file(report_out, report_to_json(result.report));

  Manifest m;
  m.command = "resample";
  m.argv = argv;
  m.parameters = params;
  m.seed = seed;
  m.inputs["dataset"] = a.dataset;
  m.inputs["xml"] = xml.string();
  m.outputs["dataset"] = arff_out.string();
  m.outputs["xml"] = xml_out.string();
  m.outputs["report"] = report_out.string();
  m.profile_before_digest =
      digest(profile_to_json(result.report.profile_before()));
  m.profile_after_digest = digest(profile_to_json(result.report.profile_after()));
  write_text_file(with_suffix(stem, ".manifest.json"), m.to_json());

  warn_zero_count_labels(result.dataset, result.report.profile_after(), err);
  std::vector<std::vector<std::string>> rows;
  rows.push_back(profile_row("before", result.report.profile_before()));
  for (const StageReport& stage : result.report.stages) {
    rows.push_back(profile_row(stage.method, stage.profile_after));
  }
  print_table(out, kProfileHeader, rows);
  for (const StageReport& stage : result.report.stages) {
    out << stage.method << ": " << stage.instances_before << " -> "
        << stage.instances_after << " instances (+" << stage.added.size()
        << " / -" << stage.removed.size();
    if (!stage.split.empty()) out << ", " << stage.split.size() << " split";
    out << ")\n";
  }
  return kExitOk;
}

struct PartitionArgs {
  std::string dataset;
  std::string xml;
  std::size_t folds = 10;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
};

int cmd_partition(const PartitionArgs& a, const std::vector<std::string>& argv,
                  std::ostream& out, std::ostream&) {
  const std::uint64_t seed = resolve_seed(a.seed);
  const fs::path xml = header_path(a.dataset, a.xml);
  const MultiLabelDataset dataset = load_mulan(a.dataset, xml);
  const FoldAssignment folds = stratified_kfold(dataset, a.folds, seed);

  const fs::path dir(a.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create directory '" + dir.string() +
                  "': " + ec.message());
  }
  const std::string stem = fs::path(a.dataset).stem().string();
  Manifest m;
  m.command = "partition";
  m.argv = argv;
  m.parameters["folds"] = a.folds;
  m.parameters["seed"] = seed;
  m.seed = seed;
  m.inputs["dataset"] = a.dataset;
  m.inputs["xml"] = xml.string();
  Json files = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (std::size_t f = 0; f < a.folds; ++f) {
    const FoldSplit split = split_fold(dataset, folds, f);
    const std::string base = stem + "-fold" + std::to_string(f);
    const fs::path train_arff = dir / (base + "-train.arff");
    const fs::path train_xml = dir / (base + "-train.xml");
    const fs::path test_arff = dir / (base + "-test.arff");
    const fs::path test_xml = dir / (base + "-test.xml");
    save_mulan(split.train, train_arff, train_xml);
    save_mulan(split.test, test_arff, test_xml);
    Json entry;
    entry["fold"] = f;
    entry["train"] = train_arff.string();
    entry["train_xml"] = train_xml.string();
    entry["test"] = test_arff.string();
    entry["test_xml"] = test_xml.string();
    files.push_back(std::move(entry));
    rows.push_back({std::to_string(f),
                    std::to_string(split.train.num_instances()),
                    std::to_string(split.test.num_instances())});
  }
  const fs::path csv = dir / "assignment.csv";
  write_text_file(csv, folds_to_csv(folds));
  m.outputs["folds"] = std::move(files);
  m.outputs["assignment"] = csv.string();
  write_text_file(dir / "manifest.json", m.to_json());
  print_table(out, {"Fold", "Train", "Test"}, rows);
  return kExitOk;
}

struct EvaluateArgs {
  std::string train;
  std::string train_xml;
  std::string test;
  std::string test_xml;
  std::string classifier = "mlknn";
  std::size_t k = 10;
  double smoothing = 1.0;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int cmd_evaluate(const EvaluateArgs& a, const std::vector<std::string>& argv,
                 std::ostream& out, std::ostream&) {
  const std::uint64_t seed = resolve_seed(a.seed);
  if (a.classifier != "mlknn") {
    throw InvalidParameterError("unknown classifier '" + a.classifier +
                                "' (only mlknn is available)");
  }
  const fs::path train_xml = header_path(a.train, a.train_xml);
  const fs::path test_xml = header_path(a.test, a.test_xml);
  const MultiLabelDataset train = load_mulan(a.train, train_xml);
  const MultiLabelDataset test = load_mulan(a.test, test_xml);
  const MlknnModel model = mlknn_train(train, MlknnOptions{a.k, a.smoothing});
  const std::vector<Labelset> truth = truth_of(test);
  const EvaluationReport report = evaluate(truth, mlknn_predict(model, test));

  print_table(out,
              {"Metric", "Value"},
              {{"HammingLoss", fixed(report.hamming_loss)},
               {"RankingLoss", fixed(report.ranking_loss)},
               {"Precision", fixed(report.precision)},
               {"Recall", fixed(report.recall)},
               {"F-Measure", fixed(report.f_measure)},
               {"AUC", fixed(report.auc)}});
  if (!a.out.empty()) {
    const fs::path path(a.out);
    ensure_parent(path);
    write_text_file(path, evaluation_to_json(report));
    Manifest m;
    m.command = "evaluate";
    m.argv = argv;
    m.parameters["classifier"] = a.classifier;
    m.parameters["k"] = a.k;
    m.parameters["smoothing"] = a.smoothing;
    m.parameters["seed"] = seed;
    m.seed = seed;
    m.inputs["train"] = a.train;
    m.inputs["train_xml"] = train_xml.string();
    m.inputs["test"] = a.test;
    m.inputs["test_xml"] = test_xml.string();
    m.outputs["report"] = path.string();
    write_text_file(fs::path(path).replace_extension(".manifest.json"),
                    m.to_json());
  }
  return kExitOk;
}

struct ConcurrenceArgs {
  std::string dataset;
  std::string xml;
  std::size_t top = 0;
  std::string out;
};

int cmd_concurrence(const ConcurrenceArgs& a,
                    const std::vector<std::string>& argv, std::ostream& out,
                    std::ostream&) {
  const fs::path xml = header_path(a.dataset, a.xml);
  const MultiLabelDataset dataset = load_mulan(a.dataset, xml);
  const std::vector<ConcurrenceRow> rows =
      concurrence_export(dataset, a.top, a.top);
  const std::string csv = concurrence_to_csv(dataset, rows);
  if (a.out.empty()) {
    out << csv;
    return kExitOk;
  }
  const fs::path path(a.out);
  ensure_parent(path);
  write_text_file(path, csv);
  Manifest m;
  m.command = "concurrence";
  m.argv = argv;
  m.parameters["top"] = a.top;
  m.inputs["dataset"] = a.dataset;
  m.inputs["xml"] = xml.string();
  m.outputs["concurrence"] = path.string();
  write_text_file(fs::path(path).replace_extension(".manifest.json"),
                  m.to_json());
  return kExitOk;
}

int cmd_replay(const std::string& manifest_path, std::ostream& out,
               std::ostream& err) {
  const std::string text = read_text_file(manifest_path);
  Json manifest;
  try {
    manifest = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(manifest_path + ": " + e.what());
  }
  if (!manifest.contains("argv") || !manifest["argv"].is_array()) {
    throw ParseError(manifest_path + ": manifest has no argv array");
  }
  std::vector<std::string> argv;
  for (const auto& arg : manifest["argv"]) {
    if (!arg.is_string()) {
      throw ParseError(manifest_path + ": argv entries must be strings");
    }
    argv.push_back(arg.get<std::string>());
  }
  if (argv.empty() || argv.front() == "replay") {
    throw InvalidParameterError(manifest_path +
                                ": manifest does not describe a command");
  }
  return run(argv, out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Multilabel imbalance metrics, resampling and evaluation",
               "mlbalance"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  InfoArgs info;
  CLI::App* info_cmd = app.add_subcommand(
      "info", "Print the imbalance profile of a dataset");
  info_cmd->add_option("dataset", info.dataset, "ARFF file")->required();
  info_cmd->add_option("--xml", info.xml,
                       "Label header (default: <dataset>.xml)");
  info_cmd->add_option("--json", info.json, "Write the profile as JSON here");

  ResampleArgs rs;
  CLI::App* resample_cmd = app.add_subcommand(
      "resample", "Resample a dataset, optionally after label decoupling");
  resample_cmd->add_option("dataset", rs.dataset, "ARFF file")->required();
  resample_cmd->add_option("--xml", rs.xml,
                           "Label header (default: <dataset>.xml)");
  resample_cmd->add_option("--method", rs.method, "mlros, mlenn or mlsmote")
      ->required();
  resample_cmd->add_option("--p", rs.percentage,
                           "ML-ROS size increment in percent")
      ->capture_default_str();
  resample_cmd->add_option("--ht", rs.threshold, "MLeNN Hamming threshold")
      ->capture_default_str();
  resample_cmd->add_option("--nn", rs.nn, "MLeNN neighbor count")
      ->capture_default_str();
  resample_cmd->add_option("--k", rs.k, "MLSMOTE neighbor count")
      ->capture_default_str();
  resample_cmd->add_option("--remedial", rs.remedial,
                           "Decouple first: mean, p25, p37, p50, p62, p75 or "
                           "any pNN");
  resample_cmd->add_flag("--drop-empty", rs.drop_empty,
                         "Discard decoupled instances left without labels");
  resample_cmd->add_option("--seed", rs.seed,
                           std::string("Random seed (default: $") +
                               kSeedEnvVar + " or 0)");
  resample_cmd->add_option("--out", rs.out,
                           "Output stem; writes .arff, .xml, .report.json and "
                           ".manifest.json")
      ->required();

  PartitionArgs part;
  CLI::App* partition_cmd = app.add_subcommand(
      "partition", "Write stratified k-fold train/test splits");
  partition_cmd->add_option("dataset", part.dataset, "ARFF file")->required();
  partition_cmd->add_option("--xml", part.xml,
                            "Label header (default: <dataset>.xml)");
  partition_cmd->add_option("--folds", part.folds, "Number of folds")
      ->capture_default_str();
  partition_cmd->add_option("--seed", part.seed,
                            std::string("Random seed (default: $") +
                                kSeedEnvVar + " or 0)");
  partition_cmd->add_option("--out-dir", part.out_dir, "Output directory")
      ->required();

  EvaluateArgs ev;
  CLI::App* evaluate_cmd = app.add_subcommand(
      "evaluate", "Train on one dataset, evaluate on another");
  evaluate_cmd->add_option("--train", ev.train, "Training ARFF")->required();
  evaluate_cmd->add_option("--train-xml", ev.train_xml, "Training label header");
  evaluate_cmd->add_option("--test", ev.test, "Test ARFF")->required();
  evaluate_cmd->add_option("--test-xml", ev.test_xml, "Test label header");
  evaluate_cmd->add_option("--classifier", ev.classifier, "Classifier")
      ->capture_default_str();
  evaluate_cmd->add_option("--k", ev.k, "ML-kNN neighbor count")
      ->capture_default_str();
  evaluate_cmd->add_option("--smoothing", ev.smoothing, "ML-kNN smoothing")
      ->capture_default_str();
  evaluate_cmd->add_option("--seed", ev.seed,
                           "Recorded in the manifest; ML-kNN is deterministic");
  evaluate_cmd->add_option("--out", ev.out, "Write the report as JSON here");

  ConcurrenceArgs conc;
  CLI::App* concurrence_cmd = app.add_subcommand(
      "concurrence", "Export label co-occurrence among frequent and rare labels");
  concurrence_cmd->add_option("dataset", conc.dataset, "ARFF file")->required();
  concurrence_cmd->add_option("--xml", conc.xml,
                              "Label header (default: <dataset>.xml)");
  concurrence_cmd->add_option("--top", conc.top,
                              "How many most frequent and least frequent "
                              "labels to include")
      ->required();
  concurrence_cmd->add_option("--out", conc.out, "CSV path (default: stdout)");

  std::string manifest_path;
  CLI::App* replay_cmd =
      app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay_cmd->add_option("manifest", manifest_path, "Manifest JSON")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParameterError;
  }

  try {
    if (*info_cmd) return cmd_info(info, args, out, err);
    if (*resample_cmd) return cmd_resample(rs, args, out, err);
    if (*partition_cmd) return cmd_partition(part, args, out, err);
    if (*evaluate_cmd) return cmd_evaluate(ev, args, out, err);
    if (*concurrence_cmd) return cmd_concurrence(conc, args, out, err);
    if (*replay_cmd) return cmd_replay(manifest_path, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const UndefinedMetricError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InvalidParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameterError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitInternalError;
}

}  // namespace mlbalance::cli

// Copyright 2026 The docsum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DOCSUM_EXPERIMENT_HPP_
#define DOCSUM_EXPERIMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "docsum/analyzer.hpp"
#include "docsum/corpus.hpp"
#include "docsum/features.hpp"
#include "docsum/learn.hpp"
#include "docsum/regression.hpp"
#include "docsum/rouge.hpp"

namespace docsum {

struct ExperimentConfig {
  std::string name;  // empty: "<feature_set>-<regressor>"
  std::string corpus_path;
  FeatureSet feature_set = FeatureSet::AwareDoc;
  RegressorKind regressor = RegressorKind::Linear;
  std::size_t k = 4;
  std::uint64_t seed = 1;
  double balance_threshold = 0.5;
  double balance_ratio = 1.0;
  double alpha = 2.0;
  TreeParams tree;
  RougeAggregation rouge_aggregation = RougeAggregation::Mean;
  // Regenerate the candidate at each golden's length (otherwise one summary
  // at the rounded mean golden length is scored against every golden).
  bool per_golden_length = true;
  std::string output_dir;

  std::string label() const;
};

std::string config_to_json(const ExperimentConfig& config);
// Missing keys keep their defaults. Throws ParseError / ValidationError.
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

struct FoldResult {
  std::size_t fold = 0;
  std::size_t train_documents = 0;
  std::size_t test_documents = 0;
  std::size_t train_rows = 0;  // after balancing
  std::size_t test_rows = 0;
  bool balance_warning = false;
  EvalMetrics metrics;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::size_t corpus_documents = 0;
  std::vector<std::string> categories;
  std::vector<FoldResult> folds;
  EvalMetrics mean;
  std::size_t rouge_documents = 0;
  RougeScores rouge_model;
  RougeScores rouge_random;
  double runtime_seconds = 0.0;  // wall clock; not part of the JSON report
};

// k-fold protocol: per fold, train on the balanced training documents, score
// MSE/R² on every admissible test sentence, then summarize each test
// document at each golden's length with the fitted ranker and with a random
// ranker and score both with ROUGE (averaged per document over goldens,
// then over documents).
ExperimentReport run_experiment(const ExperimentConfig& config, const Corpus& corpus,
                                const Analyzer& analyzer);
// Loads config.corpus_path with the bundled English analyzer.
ExperimentReport run_experiment(const ExperimentConfig& config);

std::string report_to_json(const ExperimentReport& report);
std::string folds_csv(const ExperimentReport& report);
// One row per (variant, measure): model and random-baseline values.
std::string rouge_csv(const ExperimentReport& report);

// Writes report.json, folds.csv and rouge.csv into `dir` (created if
// needed). Files are staged and renamed so a failed run leaves no partial
// report behind.
void write_report(const ExperimentReport& report, const std::filesystem::path& dir);

// Flat view of a report for side-by-side comparison. Metrics absent from
// the source stay absent.
struct ReportSummary {
  std::string name;
  std::map<std::string, double> metrics;
};

// Column order of compare().
std::vector<std::string> comparison_metrics();

ReportSummary summarize_report(const ExperimentReport& report);
ReportSummary parse_report_summary(std::string_view json_text);

// CSV with one row per report and one "delta:<name>" row per later report
// (value minus the first report's). Missing metrics are blank cells.
std::string compare(std::span<const ReportSummary> reports);

}  // namespace docsum

#endif  // DOCSUM_EXPERIMENT_HPP_

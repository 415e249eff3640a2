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

#include "docsum/experiment.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "docsum/csv.hpp"
#include "docsum/error.hpp"
#include "docsum/random.hpp"
#include "docsum/ranker.hpp"
#include "docsum/scaler.hpp"
#include "docsum/summarize.hpp"
#include "docsum/target.hpp"
#include "json.hpp"

namespace docsum {

using nlohmann::json;

namespace {

constexpr RougeVariant kVariants[] = {RougeVariant::R1, RougeVariant::R2, RougeVariant::RL};

json config_json(const ExperimentConfig& c, bool with_output_dir) {
  json j{{"name", c.label()},
         {"corpus_path", c.corpus_path},
         {"feature_set", std::string(to_string(c.feature_set))},
         {"regressor", std::string(to_string(c.regressor))},
         {"k", c.k},
         {"seed", c.seed},
         {"balance_threshold", c.balance_threshold},
         {"balance_ratio", c.balance_ratio},
         {"alpha", c.alpha},
         {"tree_max_depth", c.tree.max_depth},
         {"tree_min_leaf", c.tree.min_leaf},
         {"rouge_aggregation", std::string(to_string(c.rouge_aggregation))},
         {"per_golden_length", c.per_golden_length}};
  if (with_output_dir) j["output_dir"] = c.output_dir;
  return j;
}

json scores_json(const RougeScores& s) {
  json out;
  for (RougeVariant v : kVariants) {
    const RougeScore& r = s.get(v);
    out[std::string(to_string(v))] = {
        {"precision", r.precision}, {"recall", r.recall}, {"f", r.f_measure}};
  }
  return out;
}

// Candidate tokens for each golden, selected from `ranked`.
std::vector<TokenSeq> candidates_for(const Document& doc, std::vector<RankedSentence>& ranked,
                                     const ExperimentConfig& config) {
  std::vector<TokenSeq> out;
  std::size_t fixed_cutoff = 0;
  if (!config.per_golden_length) {
    double total = 0.0;
    for (const GoldenSummary& g : doc.goldens) total += static_cast<double>(g.sentences.size());
    fixed_cutoff = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::lround(total / static_cast<double>(doc.goldens.size()))));
  }
  for (const GoldenSummary& g : doc.goldens) {
    const std::size_t cutoff = config.per_golden_length ? g.sentences.size() : fixed_cutoff;
    if (cutoff == 0) {
      out.emplace_back();
      continue;
    }
    const Summary summary = select(doc, ranked, cutoff);
    out.push_back(rouge_tokens(doc, summary.indices));
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::string ExperimentConfig::label() const {
  if (!name.empty()) return name;
  return std::string(to_string(feature_set)) + "-" + std::string(to_string(regressor));
}

std::string config_to_json(const ExperimentConfig& config) {
  return config_json(config, true).dump(2) + "\n";
}

ExperimentConfig parse_config(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  ExperimentConfig c;
  try {
    c.name = j.value("name", c.name);
    c.corpus_path = j.value("corpus_path", c.corpus_path);
    if (j.contains("feature_set")) c.feature_set = parse_feature_set(j["feature_set"].get<std::string>());
    if (j.contains("regressor")) c.regressor = parse_regressor(j["regressor"].get<std::string>());
    c.k = j.value("k", c.k);
    c.seed = j.value("seed", c.seed);
    c.balance_threshold = j.value("balance_threshold", c.balance_threshold);
    c.balance_ratio = j.value("balance_ratio", c.balance_ratio);
    c.alpha = j.value("alpha", c.alpha);
    c.tree.max_depth = j.value("tree_max_depth", c.tree.max_depth);
    c.tree.min_leaf = j.value("tree_min_leaf", c.tree.min_leaf);
    if (j.contains("rouge_aggregation")) {
      c.rouge_aggregation = parse_rouge_aggregation(j["rouge_aggregation"].get<std::string>());
    }
    c.per_golden_length = j.value("per_golden_length", c.per_golden_length);
    c.output_dir = j.value("output_dir", c.output_dir);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed config: ") + e.what());
  }
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  return parse_config(read_file(path));
}

namespace {

void check_config(const ExperimentConfig& config, const Corpus& corpus) {
  if (config.k < 2) throw ValidationError("k must be at least 2");
  if (config.k > corpus.documents.size()) {
    throw ValidationError("k = " + std::to_string(config.k) + " exceeds the " +
                          std::to_string(corpus.documents.size()) + " documents in the corpus");
  }
  if (!(config.alpha > 0.0)) throw ValidationError("alpha must be > 0");
  if (!(config.balance_ratio >= 0.0)) throw ValidationError("balance ratio must be >= 0");
  if (!(config.balance_threshold >= 0.0 && config.balance_threshold <= 1.0)) {
    throw ValidationError("balance threshold must be in [0, 1]");
  }
  if (config.tree.max_depth < 0 || config.tree.min_leaf == 0) {
    throw ValidationError("tree needs max_depth >= 0 and min_leaf >= 1");
  }
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config, const Corpus& corpus,
                                const Analyzer& analyzer) {
  check_config(config, corpus);
  const auto started = std::chrono::steady_clock::now();
  ExperimentReport report;
  report.config = config;
  report.corpus_documents = corpus.documents.size();
  report.categories = corpus.categories();

  const FeatureOptions features = FeatureOptions::from(analyzer, report.categories, config.alpha);
  const FoldPlan plan = kfold(corpus, config.k, derive_seed(config.seed, "folds"));

  std::vector<RougeScores> per_doc_model;
  std::vector<RougeScores> per_doc_random;
  for (std::size_t fold = 0; fold < config.k; ++fold) {
    std::vector<const Document*> train;
    std::vector<const Document*> test;
    for (std::size_t i = 0; i < corpus.documents.size(); ++i) {
      (plan.fold_of[i] == fold ? test : train).push_back(&corpus.documents[i]);
    }

    TrainOptions options;
    options.feature_set = config.feature_set;
    options.regressor = config.regressor;
    options.tree = config.tree;
    options.balance_threshold = config.balance_threshold;
    options.balance_ratio = config.balance_ratio;
    options.seed = derive_seed(config.seed, fold);
    BalanceResult balanced;
    const TrainedRanker ranker = train_ranker(train, features, options, &balanced);

    FeatureMatrix test_matrix = build_matrix(test, config.feature_set, features);
    attach_targets(test_matrix, test);
    const FeatureMatrix scaled = apply_scaler(test_matrix, ranker.scaler);
    const std::vector<double> predictions = predict(ranker.model, scaled, fold);

    FoldResult result;
    result.fold = fold;
    result.train_documents = train.size();
    result.test_documents = test.size();
    result.train_rows = balanced.matrix.rows();
    result.test_rows = test_matrix.rows();
    result.balance_warning = balanced.no_high_rows;
    result.metrics = evaluate(predictions, test_matrix.targets());
    report.folds.push_back(result);

    for (const Document* doc : test) {
      std::vector<TokenSeq> references;
      for (const GoldenSummary& g : doc->goldens) references.push_back(rouge_tokens(g.sentences));

      auto ranked = rank(*doc, ranker, derive_seed(0, doc->id));
      auto model_candidates = candidates_for(*doc, ranked, config);
      per_doc_model.push_back(
          score_against_goldens(model_candidates, references, config.rouge_aggregation));

      auto random_ranked = random_ranking(*doc, derive_seed(config.seed, "baseline:" + doc->id));
      auto random_candidates = candidates_for(*doc, random_ranked, config);
      per_doc_random.push_back(
          score_against_goldens(random_candidates, references, config.rouge_aggregation));
    }
  }

  for (const FoldResult& f : report.folds) {
    report.mean.mse += f.metrics.mse;
    report.mean.r2 += f.metrics.r2;
  }
  report.mean.mse /= static_cast<double>(report.folds.size());
  report.mean.r2 /= static_cast<double>(report.folds.size());
  report.rouge_documents = per_doc_model.size();
  report.rouge_model = mean_scores(per_doc_model);
  report.rouge_random = mean_scores(per_doc_random);
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  if (config.corpus_path.empty()) throw ValidationError("experiment config has no corpus_path");
  const RuleBasedAnalyzer analyzer(AnalyzerConfig::english_defaults());
  const Corpus corpus = load_corpus(config.corpus_path, analyzer);
  return run_experiment(config, corpus, analyzer);
}

std::string report_to_json(const ExperimentReport& report) {
  json folds = json::array();
  for (const FoldResult& f : report.folds) {
    folds.push_back({{"fold", f.fold},
                     {"train_documents", f.train_documents},
                     {"test_documents", f.test_documents},
                     {"train_rows", f.train_rows},
                     {"test_rows", f.test_rows},
                     {"balance_warning", f.balance_warning},
                     {"mse", f.metrics.mse},
                     {"r2", f.metrics.r2}});
  }
  json out{{"format", "docsum-report"},
           {"version", 1},
           {"name", report.config.label()},
           {"config", config_json(report.config, false)},
           {"corpus", {{"documents", report.corpus_documents}, {"categories", report.categories}}},
           {"folds", folds},
           {"mean", {{"mse", report.mean.mse}, {"r2", report.mean.r2}}},
           {"rouge",
            {{"documents", report.rouge_documents},
             {"model", scores_json(report.rouge_model)},
             {"random", scores_json(report.rouge_random)}}}};
  return out.dump(2) + "\n";
}

std::string folds_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "fold,train_documents,test_documents,train_rows,test_rows,balance_warning,mse,r2\n";
  for (const FoldResult& f : report.folds) {
    out << f.fold << ',' << f.train_documents << ',' << f.test_documents << ',' << f.train_rows
        << ',' << f.test_rows << ',' << (f.balance_warning ? "true" : "false") << ','
        << format_number(f.metrics.mse) << ',' << format_number(f.metrics.r2) << '\n';
  }
  out << "mean,,,,,," << format_number(report.mean.mse) << ',' << format_number(report.mean.r2)
      << '\n';
  return out.str();
}

std::string rouge_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "variant,measure,model,random\n";
  for (RougeVariant v : kVariants) {
    const RougeScore& m = report.rouge_model.get(v);
    const RougeScore& r = report.rouge_random.get(v);
    out << to_string(v) << ",precision," << format_number(m.precision) << ','
        << format_number(r.precision) << '\n';
    out << to_string(v) << ",recall," << format_number(m.recall) << ',' << format_number(r.recall)
        << '\n';
    out << to_string(v) << ",f," << format_number(m.f_measure) << ','
        << format_number(r.f_measure) << '\n';
  }
  return out.str();
}

void write_report(const ExperimentReport& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const std::pair<std::string, std::string> files[] = {
      {"report.json", report_to_json(report)},
      {"folds.csv", folds_csv(report)},
      {"rouge.csv", rouge_csv(report)},
  };
  for (const auto& [name, content] : files) {
    std::ofstream out(dir / (name + ".tmp"), std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
  }
  for (const auto& [name, content] : files) {
    std::filesystem::rename(dir / (name + ".tmp"), dir / name);
  }
}

std::vector<std::string> comparison_metrics() {
  std::vector<std::string> out{"mse", "r2"};
  for (std::string_view variant : {"rouge1", "rouge2", "rougeL"}) {
    for (std::string_view measure : {"p", "r", "f"}) {
      out.push_back(std::string(variant) + "_" + std::string(measure));
    }
  }
  for (std::string_view variant : {"rouge1", "rouge2", "rougeL"}) {
    out.push_back("random_" + std::string(variant) + "_f");
  }
  return out;
}

ReportSummary summarize_report(const ExperimentReport& report) {
  ReportSummary s;
  s.name = report.config.label();
  s.metrics["mse"] = report.mean.mse;
  s.metrics["r2"] = report.mean.r2;
  for (RougeVariant v : kVariants) {
    const std::string prefix(to_string(v));
    const RougeScore& m = report.rouge_model.get(v);
    s.metrics[prefix + "_p"] = m.precision;
    s.metrics[prefix + "_r"] = m.recall;
    s.metrics[prefix + "_f"] = m.f_measure;
    s.metrics["random_" + prefix + "_f"] = report.rouge_random.get(v).f_measure;
  }
  return s;
}

ReportSummary parse_report_summary(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("report must be a JSON object");
  ReportSummary s;
  s.name = j.value("name", std::string("unnamed"));
  auto take = [&](const std::string& key, const json& node) {
    if (node.is_number()) s.metrics[key] = node.get<double>();
  };
  // Flat form: {"name": ..., "metrics": {"mse": ..., ...}}
  if (j.contains("metrics") && j["metrics"].is_object()) {
    for (const auto& [key, value] : j["metrics"].items()) take(key, value);
    return s;
  }
  if (j.contains("mean") && j["mean"].is_object()) {
    if (j["mean"].contains("mse")) take("mse", j["mean"]["mse"]);
    if (j["mean"].contains("r2")) take("r2", j["mean"]["r2"]);
  }
  if (j.contains("rouge") && j["rouge"].is_object()) {
    const json& rouge = j["rouge"];
    for (std::string_view variant : {"rouge1", "rouge2", "rougeL"}) {
      const std::string v(variant);
      const json model = rouge.value("model", json::object()).value(v, json::object());
      const std::pair<const char*, const char*> measures[] = {
          {"precision", "_p"}, {"recall", "_r"}, {"f", "_f"}};
      for (const auto& [field, suffix] : measures) {
        if (model.contains(field)) take(v + suffix, model[field]);
      }
      const json random = rouge.value("random", json::object()).value(v, json::object());
      if (random.contains("f")) take("random_" + v + "_f", random["f"]);
    }
  }
  return s;
}

std::string compare(std::span<const ReportSummary> reports) {
  const std::vector<std::string> metrics = comparison_metrics();
  std::ostringstream out;
  out << "experiment";
  for (const std::string& m : metrics) out << ',' << m;
  out << '\n';
  for (const ReportSummary& r : reports) {
    out << csv_field(r.name);
    for (const std::string& m : metrics) {
      out << ',';
      if (auto it = r.metrics.find(m); it != r.metrics.end()) out << format_number(it->second);
    }
    out << '\n';
  }
  if (reports.empty()) return out.str();
  const ReportSummary& base = reports.front();
  for (std::size_t i = 1; i < reports.size(); ++i) {
    out << csv_field("delta:" + reports[i].name);
    for (const std::string& m : metrics) {
      out << ',';
      auto a = reports[i].metrics.find(m);
      auto b = base.metrics.find(m);
      if (a != reports[i].metrics.end() && b != base.metrics.end()) {
        out << format_number(a->second - b->second);
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace docsum

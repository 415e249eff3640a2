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

// docsum: supervised extractive summarization with document-aware features.
//
//   docsum validate   --corpus corpus.json
//   docsum features   --corpus corpus.json --feature-set aware_doc --out matrix.csv
//   docsum train      --corpus corpus.json --regressor linear --out model.json
//   docsum summarize  --model model.json --input article.txt --cutoff 3
//   docsum rouge      --candidate cand.txt --reference ref1.txt ref2.txt
//   docsum experiment --corpus corpus.json --suite --out results/
//   docsum compare    results/*/report.json
//
// Exit codes: 0 success, 1 invalid input, 2 runtime failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "docsum/analyzer.hpp"
#include "docsum/corpus.hpp"
#include "docsum/error.hpp"
#include "docsum/experiment.hpp"
#include "docsum/features.hpp"
#include "docsum/ranker.hpp"
#include "docsum/rouge.hpp"
#include "docsum/summarize.hpp"
#include "docsum/synthetic.hpp"
#include "docsum/target.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace docsum;

namespace {

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Writes to `path`, or stdout when empty.
void emit(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  if (fs::path parent = fs::path(path).parent_path(); !parent.empty()) fs::create_directories(parent);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

AnalyzerConfig analyzer_config(const std::string& stopwords, const std::string& cues,
                               const std::string& abbreviations, const std::string& lexicon) {
  AnalyzerConfig config = AnalyzerConfig::english_defaults();
  if (!stopwords.empty()) {
    config.stopwords.clear();
    for (auto& w : load_phrase_list(stopwords)) config.stopwords.insert(std::move(w));
  }
  if (!cues.empty()) config.cue_phrases = load_phrase_list(cues);
  if (!abbreviations.empty()) {
    config.abbreviations.clear();
    for (auto& a : load_phrase_list(abbreviations)) config.abbreviations.insert(std::move(a));
  }
  if (!lexicon.empty()) {
    for (auto& [word, pos] : load_lexicon(lexicon)) config.lexicon[word] = pos;
  }
  return config;
}

struct ResourceFlags {
  std::string stopwords, cues, abbreviations, lexicon;

  void attach(CLI::App* cmd) {
    cmd->add_option("--stopwords", stopwords, "Stop-word list (one per line)");
    cmd->add_option("--cue-phrases", cues, "Cue-phrase list (one per line)");
    cmd->add_option("--abbreviations", abbreviations, "Abbreviations that do not end sentences");
    cmd->add_option("--lexicon", lexicon, "Extra POS lexicon, word<TAB>tag per line");
  }
  RuleBasedAnalyzer analyzer() const {
    return RuleBasedAnalyzer(analyzer_config(stopwords, cues, abbreviations, lexicon));
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supervised extractive summarization with document-aware sentence features"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 1;
  std::string config_path;
  std::string out;
  auto* seed_opt = app.add_option("--seed", seed, "Run seed (all randomness derives from it)");
  app.add_option("--config", config_path, "Experiment config JSON");
  app.add_option("--out", out, "Output file or directory");

  ResourceFlags resources;

  // validate
  std::string corpus_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a corpus file and report problems");
  validate_cmd->add_option("--corpus", corpus_path, "Corpus JSON")->required();
  resources.attach(validate_cmd);

  // features
  std::string feature_set_name = "aware_doc";
  double alpha = 2.0;
  auto* features_cmd = app.add_subcommand("features", "Export the feature matrix with targets as CSV");
  features_cmd->add_option("--corpus", corpus_path, "Corpus JSON")->required();
  features_cmd->add_option("--feature-set", feature_set_name, "unaware | aware | aware_doc");
  features_cmd->add_option("--alpha", alpha, "Cosine-position spread parameter");
  resources.attach(features_cmd);

  // train
  std::string regressor_name = "linear";
  double threshold = 0.5;
  double ratio = 1.0;
  TreeParams tree;
  auto* train_cmd = app.add_subcommand("train", "Fit a sentence ranker on a whole corpus");
  train_cmd->add_option("--corpus", corpus_path, "Corpus JSON")->required();
  train_cmd->add_option("--feature-set", feature_set_name, "unaware | aware | aware_doc");
  train_cmd->add_option("--regressor", regressor_name, "linear | tree | random");
  train_cmd->add_option("--threshold", threshold, "Balancing threshold on targets");
  train_cmd->add_option("--ratio", ratio, "Maximum low:high row ratio after balancing");
  train_cmd->add_option("--alpha", alpha, "Cosine-position spread parameter");
  train_cmd->add_option("--max-depth", tree.max_depth, "Tree depth limit");
  train_cmd->add_option("--min-leaf", tree.min_leaf, "Minimum rows per tree leaf");
  resources.attach(train_cmd);

  // summarize
  std::string model_path;
  std::string input_path;
  std::string doc_id;
  std::string category;
  std::size_t cutoff_count = 0;
  double cutoff_pct = 0.0;
  auto* summarize_cmd = app.add_subcommand("summarize", "Summarize a document with a trained model");
  summarize_cmd->add_option("--model", model_path, "Model JSON from `train`")->required();
  auto* input_opt = summarize_cmd->add_option("--input", input_path, "Plain-text document");
  auto* corpus_opt = summarize_cmd->add_option("--corpus", corpus_path, "Corpus JSON");
  summarize_cmd->add_option("--doc-id", doc_id, "Document id within --corpus")->needs(corpus_opt);
  summarize_cmd->add_option("--category", category, "Category of a plain-text input");
  auto* count_opt = summarize_cmd->add_option("--cutoff", cutoff_count, "Number of sentences");
  auto* pct_opt = summarize_cmd->add_option("--cutoff-pct", cutoff_pct, "Percentage of sentences");
  count_opt->excludes(pct_opt);
  input_opt->excludes(corpus_opt);
  auto* summarize_set_opt =
      summarize_cmd->add_option("--feature-set", feature_set_name, "Must match the model");
  resources.attach(summarize_cmd);

  // rouge
  std::string candidate_path;
  std::vector<std::string> reference_paths;
  std::string aggregation = "mean";
  auto* rouge_cmd = app.add_subcommand("rouge", "ROUGE-1/2/L of a candidate against references");
  rouge_cmd->add_option("--candidate", candidate_path, "Candidate summary text")->required();
  rouge_cmd->add_option("--reference", reference_paths, "Reference summary text(s)")->required();
  rouge_cmd->add_option("--aggregation", aggregation, "mean | max over references");
  resources.attach(rouge_cmd);

  // experiment
  std::size_t k = 4;
  bool no_doc_features = false;
  bool fixed_length = false;
  bool suite = false;
  std::string name;
  auto* exp_cmd = app.add_subcommand("experiment", "Run the k-fold evaluation protocol");
  auto* exp_corpus = exp_cmd->add_option("--corpus", corpus_path, "Corpus JSON");
  auto* exp_set = exp_cmd->add_option("--feature-set", feature_set_name, "unaware | aware | aware_doc");
  auto* exp_reg = exp_cmd->add_option("--regressor", regressor_name, "linear | tree | random");
  auto* exp_k = exp_cmd->add_option("--k", k, "Number of folds");
  auto* exp_thr = exp_cmd->add_option("--threshold", threshold, "Balancing threshold on targets");
  auto* exp_ratio = exp_cmd->add_option("--ratio", ratio, "Maximum low:high ratio after balancing");
  auto* exp_alpha = exp_cmd->add_option("--alpha", alpha, "Cosine-position spread parameter");
  auto* exp_depth = exp_cmd->add_option("--max-depth", tree.max_depth, "Tree depth limit");
  auto* exp_leaf = exp_cmd->add_option("--min-leaf", tree.min_leaf, "Minimum rows per tree leaf");
  auto* exp_agg = exp_cmd->add_option("--aggregation", aggregation, "mean | max over goldens");
  auto* exp_name = exp_cmd->add_option("--name", name, "Label used in reports");
  exp_cmd->add_flag("--no-doc-features", no_doc_features,
                    "Use plain aware features instead of aware_doc");
  exp_cmd->add_flag("--fixed-length", fixed_length,
                    "Score one summary of mean golden length against every golden");
  exp_cmd->add_flag("--suite", suite,
                    "Run unaware, document-aware and random experiments and compare them");
  resources.attach(exp_cmd);

  // compare
  std::vector<std::string> report_paths;
  auto* compare_cmd = app.add_subcommand("compare", "Side-by-side table of experiment reports");
  compare_cmd->add_option("reports", report_paths, "report.json files")->required();

  // generate-corpus
  SyntheticOptions synth;
  auto* gen_cmd = app.add_subcommand("generate-corpus", "Write the synthetic evaluation corpus");
  gen_cmd->add_option("--documents", synth.documents, "Number of documents");
  gen_cmd->add_option("--min-sentences", synth.min_sentences, "Shortest document");
  gen_cmd->add_option("--max-sentences", synth.max_sentences, "Longest document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*validate_cmd) {
      const RawCorpusFile raw = read_corpus_file(corpus_path);
      std::vector<std::string> issues = validate(raw);
      if (issues.empty()) {
        const RuleBasedAnalyzer analyzer = resources.analyzer();
        for (const RawDocument& d : raw.documents) {
          try {
            analyze_document(d, analyzer);
          } catch (const ValidationError& e) {
            issues.emplace_back(e.what());
          }
        }
      }
      for (const std::string& issue : issues) std::cerr << "error: " << issue << '\n';
      if (!issues.empty()) return 1;
      std::set<std::string> categories;
      for (const RawDocument& d : raw.documents) categories.insert(d.category);
      std::cout << "ok: " << raw.documents.size() << " documents, " << categories.size()
                << " categories\n";
      return 0;
    }

    if (*features_cmd) {
      const RuleBasedAnalyzer analyzer = resources.analyzer();
      const Corpus corpus = load_corpus(corpus_path, analyzer);
      const FeatureOptions options = FeatureOptions::from(analyzer, corpus.categories(), alpha);
      FeatureMatrix matrix = build_matrix(corpus, parse_feature_set(feature_set_name), options);
      std::vector<const Document*> docs;
      for (const Document& d : corpus.documents) docs.push_back(&d);
      attach_targets(matrix, docs);
      std::ostringstream csv;
      write_csv(matrix, csv);
      emit(csv.str(), out);
      return 0;
    }

    if (*train_cmd) {
      const RuleBasedAnalyzer analyzer = resources.analyzer();
      const Corpus corpus = load_corpus(corpus_path, analyzer);
      std::vector<const Document*> docs;
      for (const Document& d : corpus.documents) docs.push_back(&d);
      TrainOptions options;
      options.feature_set = parse_feature_set(feature_set_name);
      options.regressor = parse_regressor(regressor_name);
      options.tree = tree;
      options.balance_threshold = threshold;
      options.balance_ratio = ratio;
      options.seed = seed;
      BalanceResult balanced;
      const TrainedRanker ranker = train_ranker(
          docs, FeatureOptions::from(analyzer, corpus.categories(), alpha), options, &balanced);
      if (balanced.no_high_rows) {
        std::cerr << "warning: no sentence reaches the balancing threshold; trained unbalanced\n";
      }
      emit(serialize_ranker(ranker), out);
      return 0;
    }

    if (*summarize_cmd) {
      const RuleBasedAnalyzer analyzer = resources.analyzer();
      const TrainedRanker ranker = load_ranker(model_path);
      Document doc;
      if (!input_path.empty()) {
        RawDocument raw;
        raw.id = fs::path(input_path).stem().string();
        raw.text = read_text(input_path);
        raw.category = category;
        if (ranker.feature_set == FeatureSet::AwareDoc && category.empty()) {
          throw ValidationError("model uses category features; pass --category");
        }
        doc = analyze_document(raw, analyzer);
      } else if (!corpus_path.empty()) {
        const Corpus corpus = load_corpus(corpus_path, analyzer);
        const Document* found = corpus.find(doc_id);
        if (found == nullptr) throw ValidationError("no document with id " + doc_id);
        doc = *found;
      } else {
        throw ValidationError("summarize needs --input or --corpus with --doc-id");
      }
      const Cutoff cutoff = pct_opt->count() > 0 ? Cutoff::percent(cutoff_pct)
                            : count_opt->count() > 0 ? Cutoff::sentences(cutoff_count)
                                                     : Cutoff::sentences(3);
      auto ranked = summarize_set_opt->count() > 0
                        ? rank(doc, ranker, parse_feature_set(feature_set_name), seed)
                        : rank(doc, ranker, seed);
      const Summary summary = select(doc, ranked, cutoff.resolve(doc.sentences.size()));
      emit(summary.text + "\n", out);
      return 0;
    }

    if (*rouge_cmd) {
      const RuleBasedAnalyzer analyzer = resources.analyzer();
      const TokenSeq candidate = analyzer.terms(read_text(candidate_path));
      std::vector<TokenSeq> references;
      for (const std::string& p : reference_paths) references.push_back(analyzer.terms(read_text(p)));
      const RougeScores scores =
          score_against_goldens(candidate, references, parse_rouge_aggregation(aggregation));
      nlohmann::json j;
      for (const RougeScore* s : {&scores.r1, &scores.r2, &scores.rl}) {
        j[std::string(to_string(s->variant))] = {
            {"precision", s->precision}, {"recall", s->recall}, {"f", s->f_measure}};
      }
      emit(j.dump(2) + "\n", out);
      return 0;
    }

    if (*exp_cmd) {
      ExperimentConfig config = config_path.empty() ? ExperimentConfig{} : load_config(config_path);
      if (exp_corpus->count()) config.corpus_path = corpus_path;
      if (exp_set->count()) config.feature_set = parse_feature_set(feature_set_name);
      if (exp_reg->count()) config.regressor = parse_regressor(regressor_name);
      if (exp_k->count()) config.k = k;
      if (exp_thr->count()) config.balance_threshold = threshold;
      if (exp_ratio->count()) config.balance_ratio = ratio;
      if (exp_alpha->count()) config.alpha = alpha;
      if (exp_depth->count()) config.tree.max_depth = tree.max_depth;
      if (exp_leaf->count()) config.tree.min_leaf = tree.min_leaf;
      if (exp_agg->count()) config.rouge_aggregation = parse_rouge_aggregation(aggregation);
      if (exp_name->count()) config.name = name;
      if (seed_opt->count() || config_path.empty()) config.seed = seed;
      if (fixed_length) config.per_golden_length = false;
      if (!out.empty()) config.output_dir = out;
      if (config.output_dir.empty()) config.output_dir = "results";
      if (config.corpus_path.empty()) throw ValidationError("experiment needs --corpus");

      const RuleBasedAnalyzer analyzer = resources.analyzer();
      const Corpus corpus = load_corpus(config.corpus_path, analyzer);

      if (!suite) {
        if (no_doc_features && config.feature_set == FeatureSet::AwareDoc) {
          config.feature_set = FeatureSet::Aware;
        }
        const ExperimentReport report = run_experiment(config, corpus, analyzer);
        write_report(report, config.output_dir);
        std::cout << config.label() << ": mse=" << report.mean.mse << " r2=" << report.mean.r2
                  << " rouge1_f=" << report.rouge_model.r1.f_measure
                  << " (random " << report.rouge_random.r1.f_measure << ") in "
                  << report.runtime_seconds << "s\n";
        return 0;
      }

      struct Run {
        const char* dir;
        const char* label;
        FeatureSet set;
        RegressorKind regressor;
      };
      const FeatureSet aware = no_doc_features ? FeatureSet::Aware : FeatureSet::AwareDoc;
      const Run runs[] = {
          {"experiment1", "Experiment 1 (unaware)", FeatureSet::Unaware, config.regressor},
          {"experiment2", "Experiment 2 (document-aware)", aware, config.regressor},
          {"experiment3", "Experiment 3 (random)", aware, RegressorKind::Random},
      };
      std::vector<ReportSummary> summaries;
      for (const Run& run : runs) {
        ExperimentConfig c = config;
        c.name = run.label;
        c.feature_set = run.set;
        c.regressor = run.regressor;
        c.output_dir = (fs::path(config.output_dir) / run.dir).string();
        const ExperimentReport report = run_experiment(c, corpus, analyzer);
        write_report(report, c.output_dir);
        summaries.push_back(summarize_report(report));
        std::cout << run.label << ": mse=" << report.mean.mse << " r2=" << report.mean.r2
                  << " rouge1_f=" << report.rouge_model.r1.f_measure << '\n';
      }
      emit(compare(summaries), (fs::path(config.output_dir) / "comparison.csv").string());
      return 0;
    }

    if (*compare_cmd) {
      std::vector<ReportSummary> summaries;
      for (const std::string& p : report_paths) summaries.push_back(parse_report_summary(read_text(p)));
      emit(compare(summaries), out);
      return 0;
    }

    if (*gen_cmd) {
      synth.seed = seed_opt->count() ? seed : synth.seed;
      const RawCorpusFile corpus = generate_synthetic_corpus(synth);
      if (out.empty()) throw ValidationError("generate-corpus needs --out");
      if (fs::path parent = fs::path(out).parent_path(); !parent.empty()) fs::create_directories(parent);
      write_corpus_file(corpus, out);
      return 0;
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

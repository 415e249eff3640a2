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

#include "docsum/ranker.hpp"

#include <fstream>
#include <sstream>

#include "docsum/error.hpp"
#include "docsum/random.hpp"
#include "docsum/target.hpp"
#include "json.hpp"

namespace docsum {

using nlohmann::json;

TrainedRanker train_ranker(std::span<const Document* const> docs, const FeatureOptions& features,
                           const TrainOptions& options, BalanceResult* balance_report) {
  FeatureMatrix matrix = build_matrix(docs, options.feature_set, features);
  attach_targets(matrix, docs);
  BalanceResult balanced = balance(matrix, options.balance_threshold, options.balance_ratio,
                                   derive_seed(options.seed, "balance"));

  TrainedRanker ranker;
  ranker.feature_set = options.feature_set;
  ranker.columns = matrix.columns();
  ranker.features = features;
  ranker.features.term_mapper = nullptr;
  ranker.seed = options.seed;
  ranker.scaler = fit_scaler(balanced.matrix);
  const FeatureMatrix scaled = apply_scaler(balanced.matrix, ranker.scaler);
  switch (options.regressor) {
    case RegressorKind::Linear:
      ranker.model = fit_linear(scaled);
      break;
    case RegressorKind::DecisionTree:
      ranker.model = fit_tree(scaled, options.tree);
      break;
    case RegressorKind::Random:
      ranker.model = RandomModel{derive_seed(options.seed, "random")};
      break;
  }
  if (balance_report != nullptr) *balance_report = std::move(balanced);
  return ranker;
}

FeatureMatrix prepare_matrix(const TrainedRanker& ranker, const Document& doc) {
  FeatureMatrix local = build_matrix(doc, ranker.feature_set, ranker.features);
  if (local.columns() != ranker.columns) {
    throw ValidationError("document " + doc.id + " does not match the ranker's feature schema");
  }
  return apply_scaler(local, ranker.scaler);
}

namespace {

json model_to_json(const RegressionModel& model) {
  json out;
  out["kind"] = std::string(to_string(kind_of(model)));
  if (const auto* lin = std::get_if<LinearModel>(&model)) {
    out["weights"] = lin->weights;
    out["intercept"] = lin->intercept;
    out["ridge_lambda"] = lin->ridge_lambda;
  } else if (const auto* tree = std::get_if<TreeModel>(&model)) {
    out["max_depth"] = tree->params.max_depth;
    out["min_leaf"] = tree->params.min_leaf;
    json nodes = json::array();
    for (const TreeNode& n : tree->nodes) {
      nodes.push_back({{"feature", n.feature},
                       {"threshold", n.threshold},
                       {"left", n.left},
                       {"right", n.right},
                       {"value", n.value},
                       {"samples", n.samples}});
    }
    out["nodes"] = std::move(nodes);
  } else {
    out["seed"] = std::get<RandomModel>(model).seed;
  }
  return out;
}

RegressionModel model_from_json(const json& j) {
  switch (parse_regressor(j.at("kind").get<std::string>())) {
    case RegressorKind::Linear: {
      LinearModel m;
      m.weights = j.at("weights").get<std::vector<double>>();
      m.intercept = j.at("intercept").get<double>();
      m.ridge_lambda = j.value("ridge_lambda", 0.0);
      return m;
    }
    case RegressorKind::DecisionTree: {
      TreeModel m;
      m.params.max_depth = j.at("max_depth").get<int>();
      m.params.min_leaf = j.at("min_leaf").get<std::size_t>();
      for (const json& n : j.at("nodes")) {
        TreeNode node;
        node.feature = n.at("feature").get<int>();
        node.threshold = n.at("threshold").get<double>();
        node.left = n.at("left").get<int>();
        node.right = n.at("right").get<int>();
        node.value = n.at("value").get<double>();
        node.samples = n.at("samples").get<std::size_t>();
        m.nodes.push_back(node);
      }
      const int count = static_cast<int>(m.nodes.size());
      if (count == 0) throw ValidationError("tree model has no nodes");
      for (const TreeNode& n : m.nodes) {
        if (!n.is_leaf() && (n.left <= 0 || n.left >= count || n.right <= 0 || n.right >= count)) {
          throw ValidationError("tree model has a dangling child index");
        }
      }
      return m;
    }
    case RegressorKind::Random:
      return RandomModel{j.at("seed").get<std::uint64_t>()};
  }
  throw ValidationError("unreachable regressor kind");
}

}  // namespace

std::string serialize_ranker(const TrainedRanker& ranker) {
  json out;
  out["format"] = "docsum-ranker";
  out["version"] = kRankerFormatVersion;
  out["feature_set"] = std::string(to_string(ranker.feature_set));
  out["columns"] = ranker.columns;
  out["categories"] = ranker.features.categories;
  out["alpha"] = ranker.features.alpha;
  out["cue_phrases"] = ranker.features.cue_phrases;
  out["scaler"] = {{"min", ranker.scaler.min}, {"max", ranker.scaler.max}};
  out["seed"] = ranker.seed;
  out["model"] = model_to_json(ranker.model);
  return out.dump(2) + "\n";
}

TrainedRanker parse_ranker(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    if (j.value("format", "") != "docsum-ranker") throw ValidationError("not a docsum model file");
    if (j.at("version").get<int>() != kRankerFormatVersion) {
      throw ValidationError("unsupported model version " + j.at("version").dump());
    }
    TrainedRanker r;
    r.feature_set = parse_feature_set(j.at("feature_set").get<std::string>());
    r.columns = j.at("columns").get<std::vector<std::string>>();
    r.features.categories = j.at("categories").get<std::vector<std::string>>();
    r.features.alpha = j.at("alpha").get<double>();
    r.features.cue_phrases = j.at("cue_phrases").get<std::vector<std::vector<std::string>>>();
    r.scaler.min = j.at("scaler").at("min").get<std::vector<double>>();
    r.scaler.max = j.at("scaler").at("max").get<std::vector<double>>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.model = model_from_json(j.at("model"));
    if (r.columns != feature_columns(r.feature_set, r.features.categories)) {
      throw ValidationError("model columns do not match its feature set");
    }
    if (r.scaler.min.size() != r.columns.size() || r.scaler.max.size() != r.columns.size()) {
      throw ValidationError("model scaler width does not match its columns");
    }
    if (const auto* lin = std::get_if<LinearModel>(&r.model);
        lin != nullptr && lin->weights.size() != r.columns.size()) {
      throw ValidationError("model weight count does not match its columns");
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed model file: ") + e.what());
  }
}

void save_ranker(const TrainedRanker& ranker, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write model file: " + path.string());
  out << serialize_ranker(ranker);
}

TrainedRanker load_ranker(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open model file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_ranker(buffer.str());
}

}  // namespace docsum

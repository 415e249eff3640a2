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

#ifndef DOCSUM_RANKER_HPP_
#define DOCSUM_RANKER_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "docsum/features.hpp"
#include "docsum/learn.hpp"
#include "docsum/regression.hpp"
#include "docsum/scaler.hpp"

namespace docsum {

struct TrainOptions {
  FeatureSet feature_set = FeatureSet::AwareDoc;
  RegressorKind regressor = RegressorKind::Linear;
  TreeParams tree;
  double balance_threshold = 0.5;
  double balance_ratio = 1.0;
  std::uint64_t seed = 0;
};

// A fitted sentence scorer together with everything needed to rebuild and
// scale its input rows.
struct TrainedRanker {
  FeatureSet feature_set = FeatureSet::AwareDoc;
  std::vector<std::string> columns;
  FeatureOptions features;  // alpha, cue phrases, category set
  ScalerParams scaler;
  RegressionModel model;
  std::uint64_t seed = 0;
};

inline constexpr int kRankerFormatVersion = 1;

// Builds the training matrix, attaches targets, balances, fits the scaler on
// the balanced rows and fits the regressor on the scaled rows. When
// `balance_report` is non-null it receives the balancing outcome.
TrainedRanker train_ranker(std::span<const Document* const> docs, const FeatureOptions& features,
                           const TrainOptions& options, BalanceResult* balance_report = nullptr);

// Local matrix of a document, scaled with the ranker's parameters. Throws
// ValidationError when the document's schema (e.g. an unseen category) does
// not match the ranker's.
FeatureMatrix prepare_matrix(const TrainedRanker& ranker, const Document& doc);

std::string serialize_ranker(const TrainedRanker& ranker);
// Throws ParseError / ValidationError on malformed or inconsistent input.
TrainedRanker parse_ranker(std::string_view text);

void save_ranker(const TrainedRanker& ranker, const std::filesystem::path& path);
TrainedRanker load_ranker(const std::filesystem::path& path);

}  // namespace docsum

#endif  // DOCSUM_RANKER_HPP_

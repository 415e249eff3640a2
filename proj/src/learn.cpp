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

#include "docsum/learn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "docsum/random.hpp"

namespace docsum {

EvalMetrics evaluate(std::span<const double> predictions, std::span<const double> targets) {
  if (predictions.size() != targets.size()) {
    throw std::invalid_argument("evaluate: size mismatch");
  }
  if (targets.empty()) throw std::invalid_argument("evaluate: no samples");
  const double n = static_cast<double>(targets.size());
  const double mean = std::accumulate(targets.begin(), targets.end(), 0.0) / n;
  double ss_res = 0.0;
  double ss_tot = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    ss_res += (targets[i] - predictions[i]) * (targets[i] - predictions[i]);
    ss_tot += (targets[i] - mean) * (targets[i] - mean);
  }
  EvalMetrics m;
  m.mse = ss_res / n;
  if (ss_tot > 0.0) {
    m.r2 = 1.0 - ss_res / ss_tot;
  } else {
    m.r2 = ss_res == 0.0 ? 1.0 : 0.0;
  }
  return m;
}

BalanceResult balance(const FeatureMatrix& matrix, double threshold, double ratio,
                      std::uint64_t seed) {
  if (!matrix.has_targets()) throw std::invalid_argument("balance: matrix has no targets");
  if (ratio < 0.0) throw std::invalid_argument("balance: ratio must be >= 0");
  std::vector<std::size_t> high;
  std::vector<std::size_t> low;
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    (matrix.targets()[i] >= threshold ? high : low).push_back(i);
  }
  BalanceResult out;
  out.high_rows = high.size();
  if (high.empty()) {
    out.matrix = matrix;
    out.low_rows_kept = low.size();
    out.no_high_rows = true;
    return out;
  }
  const auto allowed =
      static_cast<std::size_t>(std::floor(ratio * static_cast<double>(high.size())));
  if (low.size() <= allowed) {
    out.matrix = matrix;
    out.low_rows_kept = low.size();
    return out;
  }
  Rng rng(seed);
  rng.shuffle(low);
  low.resize(allowed);
  std::vector<std::size_t> keep = high;
  keep.insert(keep.end(), low.begin(), low.end());
  std::sort(keep.begin(), keep.end());
  out.matrix = matrix.select_rows(keep);
  out.low_rows_kept = allowed;
  out.low_rows_dropped = matrix.rows() - keep.size();
  return out;
}

std::vector<std::string> FoldPlan::members(std::size_t fold) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < document_ids.size(); ++i) {
    if (fold_of[i] == fold) out.push_back(document_ids[i]);
  }
  return out;
}

std::size_t FoldPlan::fold_size(std::size_t fold) const {
  return static_cast<std::size_t>(std::count(fold_of.begin(), fold_of.end(), fold));
}

FoldPlan kfold(std::span<const std::string> document_ids, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("kfold: k must be >= 2");
  if (k > document_ids.size()) {
    throw std::invalid_argument("kfold: k = " + std::to_string(k) + " exceeds " +
                                std::to_string(document_ids.size()) + " documents");
  }
  FoldPlan plan;
  plan.k = k;
  plan.seed = seed;
  plan.document_ids.assign(document_ids.begin(), document_ids.end());
  plan.fold_of.assign(document_ids.size(), 0);
  std::vector<std::size_t> order(document_ids.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.shuffle(order);
  for (std::size_t pos = 0; pos < order.size(); ++pos) plan.fold_of[order[pos]] = pos % k;
  return plan;
}

FoldPlan kfold(const Corpus& corpus, std::size_t k, std::uint64_t seed) {
  std::vector<std::string> ids;
  for (const Document& d : corpus.documents) ids.push_back(d.id);
  return kfold(ids, k, seed);
}

}  // namespace docsum

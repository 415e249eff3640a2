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

#ifndef DOCSUM_LEARN_HPP_
#define DOCSUM_LEARN_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "docsum/corpus.hpp"
#include "docsum/features.hpp"

namespace docsum {

struct EvalMetrics {
  double mse = 0.0;
  double r2 = 0.0;
};

// Mean squared error and coefficient of determination 1 - SS_res / SS_tot.
// With constant targets R² is 1 for a perfect fit and 0 otherwise.
EvalMetrics evaluate(std::span<const double> predictions, std::span<const double> targets);

struct BalanceResult {
  FeatureMatrix matrix;
  std::size_t high_rows = 0;
  std::size_t low_rows_kept = 0;
  std::size_t low_rows_dropped = 0;
  // Set when no row reaches the threshold; the input is returned unchanged.
  bool no_high_rows = false;
};

// Keeps every row with target >= threshold and a seeded uniform subsample of
// the remaining rows, at most floor(ratio * high) of them. Row order is
// preserved.
BalanceResult balance(const FeatureMatrix& matrix, double threshold, double ratio,
                      std::uint64_t seed);

// Document-level k-fold assignment.
struct FoldPlan {
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> document_ids;  // input order
  std::vector<std::size_t> fold_of;        // parallel to document_ids

  std::vector<std::string> members(std::size_t fold) const;
  std::size_t fold_size(std::size_t fold) const;
};

// Shuffles the ids with `seed` and deals them round-robin into k folds, so
// fold sizes differ by at most one. Throws std::invalid_argument when k < 2
// or k exceeds the number of documents.
FoldPlan kfold(std::span<const std::string> document_ids, std::size_t k, std::uint64_t seed);
FoldPlan kfold(const Corpus& corpus, std::size_t k, std::uint64_t seed);

}  // namespace docsum

#endif  // DOCSUM_LEARN_HPP_

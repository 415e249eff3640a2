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

#ifndef DOCSUM_REGRESSION_HPP_
#define DOCSUM_REGRESSION_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "docsum/features.hpp"

namespace docsum {

enum class RegressorKind { Linear, DecisionTree, Random };

std::string_view to_string(RegressorKind kind);
// "linear" | "tree" | "random"
RegressorKind parse_regressor(std::string_view name);

// Ordinary least squares with intercept, solved through the normal equations
// on centered data. When the Gram matrix is (near) singular, or there are no
// more rows than columns, a small ridge penalty is added to the weights.
struct LinearModel {
  std::vector<double> weights;
  double intercept = 0.0;
  double ridge_lambda = 0.0;  // 0 when the plain solve was used

  bool operator==(const LinearModel&) const = default;
};

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;  // x[feature] <= threshold goes left
  int left = -1;
  int right = -1;
  double value = 0.0;  // mean target of the node's training rows
  std::size_t samples = 0;

  bool is_leaf() const { return feature < 0; }
  bool operator==(const TreeNode&) const = default;
};

struct TreeParams {
  int max_depth = 8;
  std::size_t min_leaf = 5;
};

// CART regression tree; nodes[0] is the root.
struct TreeModel {
  std::vector<TreeNode> nodes;
  TreeParams params;

  bool operator==(const TreeModel& o) const { return nodes == o.nodes; }
};

// Ignores its input: every row gets an independent uniform draw on [0, 1).
struct RandomModel {
  std::uint64_t seed = 0;

  bool operator==(const RandomModel&) const = default;
};

using RegressionModel = std::variant<LinearModel, TreeModel, RandomModel>;

RegressorKind kind_of(const RegressionModel& model);

inline constexpr double kRidgeLambda = 1e-6;
inline constexpr double kMaxGramCondition = 1e12;

// Both throw std::invalid_argument when the matrix has no targets or rows.
LinearModel fit_linear(const FeatureMatrix& matrix);
TreeModel fit_tree(const FeatureMatrix& matrix, const TreeParams& params = {});

double predict_row(const LinearModel& model, std::span<const double> x);
double predict_row(const TreeModel& model, std::span<const double> x);

// `stream` selects an independent random sequence for RandomModel so callers
// can derive per-unit streams from one seed; deterministic models ignore it.
std::vector<double> predict(const RegressionModel& model, const FeatureMatrix& matrix,
                            std::uint64_t stream = 0);

}  // namespace docsum

#endif  // DOCSUM_REGRESSION_HPP_

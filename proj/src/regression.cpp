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

#include "docsum/regression.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "docsum/error.hpp"
#include "docsum/random.hpp"

namespace docsum {
namespace {

void require_training_data(const FeatureMatrix& m, const char* who) {
  if (m.empty()) throw std::invalid_argument(std::string(who) + ": empty matrix");
  if (!m.has_targets()) throw std::invalid_argument(std::string(who) + ": matrix has no targets");
}

struct TreeBuilder {
  const FeatureMatrix& m;
  const std::vector<double>& y;
  TreeParams params;
  std::vector<TreeNode> nodes;

  int build(std::vector<std::size_t> rows, int depth) {
    const int id = static_cast<int>(nodes.size());
    nodes.emplace_back();
    const double n = static_cast<double>(rows.size());
    double mean = 0.0;
    for (std::size_t r : rows) mean += y[r];
    mean /= n;
    double parent_sse = 0.0;
    for (std::size_t r : rows) parent_sse += (y[r] - mean) * (y[r] - mean);
    nodes[id].value = mean;
    nodes[id].samples = rows.size();

    const auto [lo_y, hi_y] = std::minmax_element(rows.begin(), rows.end(), [&](std::size_t a, std::size_t b) {
      return y[a] < y[b];
    });
    const bool pure = y[*lo_y] == y[*hi_y];
    if (depth >= params.max_depth || rows.size() < 2 * params.min_leaf || pure) return id;

    int best_feature = -1;
    double best_threshold = 0.0;
    // Gains within tol count as ties; the earlier column and threshold win.
    const double tol = 1e-9 * parent_sse;
    double best_gain = 0.0;
    std::vector<std::size_t> order(rows);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return m.at(a, j) < m.at(b, j); });
      // Prefix sums of mean-shifted targets.
      double sum_l = 0.0;
      double sq_l = 0.0;
      double sum_all = 0.0;
      double sq_all = 0.0;
      for (std::size_t r : order) {
        const double d = y[r] - mean;
        sum_all += d;
        sq_all += d * d;
      }
      for (std::size_t k = 1; k < order.size(); ++k) {
        const double d = y[order[k - 1]] - mean;
        sum_l += d;
        sq_l += d * d;
        if (k < params.min_leaf || order.size() - k < params.min_leaf) continue;
        const double lo = m.at(order[k - 1], j);
        const double hi = m.at(order[k], j);
        if (!(lo < hi)) continue;
        const double nl = static_cast<double>(k);
        const double nr = static_cast<double>(order.size() - k);
        const double sse_l = std::max(0.0, sq_l - sum_l * sum_l / nl);
        const double sum_r = sum_all - sum_l;
        const double sse_r = std::max(0.0, (sq_all - sq_l) - sum_r * sum_r / nr);
        const double gain = parent_sse - sse_l - sse_r;
        if (gain > best_gain + tol) {
          best_gain = gain;
          best_feature = static_cast<int>(j);
          double mid = lo + (hi - lo) / 2.0;
          best_threshold = mid < hi ? mid : lo;
        }
      }
    }
    if (best_feature < 0) return id;

    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    for (std::size_t r : rows) {
      (m.at(r, static_cast<std::size_t>(best_feature)) <= best_threshold ? left : right)
          .push_back(r);
    }
    nodes[id].feature = best_feature;
    nodes[id].threshold = best_threshold;
    const int l = build(std::move(left), depth + 1);
    nodes[id].left = l;
    const int r = build(std::move(right), depth + 1);
    nodes[id].right = r;
    return id;
  }
};

}  // namespace

std::string_view to_string(RegressorKind kind) {
  switch (kind) {
    case RegressorKind::Linear: return "linear";
    case RegressorKind::DecisionTree: return "tree";
    case RegressorKind::Random: return "random";
  }
  return "linear";
}

RegressorKind parse_regressor(std::string_view name) {
  if (name == "linear") return RegressorKind::Linear;
  if (name == "tree") return RegressorKind::DecisionTree;
  if (name == "random") return RegressorKind::Random;
  throw ValidationError("unknown regressor: " + std::string(name));
}

RegressorKind kind_of(const RegressionModel& model) {
  switch (model.index()) {
    case 0: return RegressorKind::Linear;
    case 1: return RegressorKind::DecisionTree;
    default: return RegressorKind::Random;
  }
}

LinearModel fit_linear(const FeatureMatrix& matrix) {
  require_training_data(matrix, "fit_linear");
  const auto n = static_cast<Eigen::Index>(matrix.rows());
  const auto p = static_cast<Eigen::Index>(matrix.cols());
  Eigen::MatrixXd x(n, p);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    auto r = matrix.row(static_cast<std::size_t>(i));
    for (Eigen::Index j = 0; j < p; ++j) x(i, j) = r[static_cast<std::size_t>(j)];
    y(i) = matrix.targets()[static_cast<std::size_t>(i)];
  }
  const Eigen::RowVectorXd x_mean = x.colwise().mean();
  const double y_mean = y.mean();
  x.rowwise() -= x_mean;
  y.array() -= y_mean;

  LinearModel model;
  Eigen::VectorXd w = Eigen::VectorXd::Zero(p);
  if (p > 0) {
    Eigen::MatrixXd gram = x.transpose() * x;
    const Eigen::VectorXd rhs = x.transpose() * y;
    bool ridge = n <= p;
    if (!ridge) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram, Eigen::EigenvaluesOnly);
      const double lo = eig.eigenvalues()(0);
      const double hi = eig.eigenvalues()(p - 1);
      ridge = !(lo > 0.0) || hi / lo > kMaxGramCondition;
    }
    if (ridge) {
      model.ridge_lambda = kRidgeLambda;
      gram.diagonal().array() += kRidgeLambda;
    }
    w = gram.ldlt().solve(rhs);
  }
  model.weights.assign(w.data(), w.data() + p);
  model.intercept = y_mean - x_mean.dot(w);
  return model;
}

TreeModel fit_tree(const FeatureMatrix& matrix, const TreeParams& params) {
  require_training_data(matrix, "fit_tree");
  if (params.min_leaf == 0) throw std::invalid_argument("fit_tree: min_leaf must be >= 1");
  TreeBuilder builder{matrix, matrix.targets(), params, {}};
  std::vector<std::size_t> rows(matrix.rows());
  std::iota(rows.begin(), rows.end(), 0);
  builder.build(std::move(rows), 0);
  return TreeModel{std::move(builder.nodes), params};
}

double predict_row(const LinearModel& model, std::span<const double> x) {
  double out = model.intercept;
  for (std::size_t j = 0; j < model.weights.size(); ++j) out += model.weights[j] * x[j];
  return out;
}

double predict_row(const TreeModel& model, std::span<const double> x) {
  int node = 0;
  while (!model.nodes[node].is_leaf()) {
    const TreeNode& t = model.nodes[node];
    node = x[static_cast<std::size_t>(t.feature)] <= t.threshold ? t.left : t.right;
  }
  return model.nodes[node].value;
}

std::vector<double> predict(const RegressionModel& model, const FeatureMatrix& matrix,
                            std::uint64_t stream) {
  std::vector<double> out;
  out.reserve(matrix.rows());
  if (const auto* random = std::get_if<RandomModel>(&model)) {
    Rng rng(derive_seed(random->seed, stream));
    for (std::size_t i = 0; i < matrix.rows(); ++i) out.push_back(rng.uniform01());
    return out;
  }
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (!std::is_same_v<M, RandomModel>) {
          if constexpr (std::is_same_v<M, LinearModel>) {
            if (m.weights.size() != matrix.cols()) {
              throw ValidationError("model expects " + std::to_string(m.weights.size()) +
                                    " features, matrix has " + std::to_string(matrix.cols()));
            }
          } else {
            for (const TreeNode& node : m.nodes) {
              if (node.feature >= static_cast<int>(matrix.cols())) {
                throw ValidationError("tree splits on feature " + std::to_string(node.feature) +
                                      ", matrix has " + std::to_string(matrix.cols()));
              }
            }
          }
          for (std::size_t i = 0; i < matrix.rows(); ++i) out.push_back(predict_row(m, matrix.row(i)));
        }
      },
      model);
  return out;
}

}  // namespace docsum

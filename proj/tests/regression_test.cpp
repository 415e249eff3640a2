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

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "docsum/error.hpp"
#include "docsum/random.hpp"
#include "oracles.hpp"

namespace docsum {
namespace {

FeatureMatrix matrix_of(const oracle::Rows& x, const std::vector<double>& y) {
  std::vector<std::string> cols;
  for (std::size_t j = 0; j < x[0].size(); ++j) cols.push_back("x" + std::to_string(j));
  FeatureMatrix m(FeatureSet::Unaware, cols);
  for (std::size_t i = 0; i < x.size(); ++i) m.append_row({"d", i}, x[i], &y[i]);
  return m;
}

TEST(FitLinear, ExactLine) {
  oracle::Rows x;
  std::vector<double> y;
  for (int i = 0; i < 10; ++i) {
    x.push_back({static_cast<double>(i) / 3.0});
    y.push_back(2.0 * x.back()[0] + 1.0);
  }
  const LinearModel m = fit_linear(matrix_of(x, y));
  EXPECT_NEAR(m.weights[0], 2.0, 1e-8);
  EXPECT_NEAR(m.intercept, 1.0, 1e-8);
  EXPECT_EQ(m.ridge_lambda, 0.0);
}

TEST(FitLinear, ConstantTarget) {
  oracle::Rows x = {{0.1, 3}, {0.5, 1}, {0.2, 7}, {0.9, 2}};
  std::vector<double> y(4, 0.42);
  const LinearModel m = fit_linear(matrix_of(x, y));
  EXPECT_NEAR(m.weights[0], 0.0, 1e-12);
  EXPECT_NEAR(m.weights[1], 0.0, 1e-12);
  EXPECT_NEAR(m.intercept, 0.42, 1e-12);
}

TEST(FitLinear, MatchesIterativeRefit) {
  Rng rng(50);
  oracle::Rows x(50, std::vector<double>(5));
  std::vector<double> y(50);
  for (std::size_t i = 0; i < 50; ++i) {
    for (double& v : x[i]) v = rng.uniform01();
    y[i] = 0.3 * x[i][0] - 0.7 * x[i][2] + 0.1 * x[i][4] + 0.2 + 0.05 * rng.normal();
  }
  const LinearModel m = fit_linear(matrix_of(x, y));
  const std::vector<double> w = oracle::least_squares_cg(x, y);
  double res_model = 0.0, res_oracle = 0.0;
  for (std::size_t i = 0; i < 50; ++i) {
    double pm = predict_row(m, x[i]);
    double po = w[5];
    for (std::size_t j = 0; j < 5; ++j) po += w[j] * x[i][j];
    res_model += (y[i] - pm) * (y[i] - pm);
    res_oracle += (y[i] - po) * (y[i] - po);
    EXPECT_NEAR(pm, po, 1e-6);
  }
  EXPECT_NEAR(res_model, res_oracle, 1e-6);
  for (std::size_t j = 0; j < 5; ++j) EXPECT_NEAR(m.weights[j], w[j], 1e-6);
}

TEST(FitLinear, SingularFallsBackToRidge) {
  // Duplicate column and fewer rows than columns.
  oracle::Rows dup = {{1, 1}, {2, 2}, {3, 3}, {4, 4}};
  std::vector<double> y = {1, 2, 3, 4};
  const LinearModel m = fit_linear(matrix_of(dup, y));
  EXPECT_EQ(m.ridge_lambda, kRidgeLambda);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(predict_row(m, dup[i]), y[i], 1e-5);

  oracle::Rows wide = {{1, 0, 2}, {0, 1, 1}};
  std::vector<double> y2 = {1, 0};
  EXPECT_EQ(fit_linear(matrix_of(wide, y2)).ridge_lambda, kRidgeLambda);
}

TEST(FitLinear, RequiresTargets) {
  FeatureMatrix m(FeatureSet::Unaware, {"x"});
  EXPECT_THROW(fit_linear(m), std::invalid_argument);
}

TEST(FitTree, PureDataIsOneLeaf) {
  oracle::Rows x = {{1}, {2}, {3}, {4}, {5}, {6}, {7}, {8}, {9}, {10}, {11}};
  std::vector<double> y(11, 0.3);
  const TreeModel t = fit_tree(matrix_of(x, y));
  ASSERT_EQ(t.nodes.size(), 1u);
  EXPECT_DOUBLE_EQ(predict_row(t, std::vector<double>{100.0}), 0.3);
}

TEST(FitTree, PerfectSplitAtRoot) {
  oracle::Rows x;
  std::vector<double> y;
  for (int i = 0; i < 12; ++i) {
    x.push_back({static_cast<double>(i % 5), static_cast<double>(i)});
    y.push_back(i < 6 ? 0.0 : 1.0);
  }
  const TreeModel t = fit_tree(matrix_of(x, y), TreeParams{4, 2});
  ASSERT_EQ(t.nodes.size(), 3u);
  EXPECT_EQ(t.nodes[0].feature, 1);
  EXPECT_EQ(t.nodes[0].threshold, 5.5);
  EXPECT_EQ(t.nodes[t.nodes[0].left].value, 0.0);
  EXPECT_EQ(t.nodes[t.nodes[0].right].value, 1.0);
}

TEST(FitTree, MatchesExhaustiveOracle) {
  Rng rng(20);
  for (int fixture = 0; fixture < 50; ++fixture) {
    oracle::Rows x(20, std::vector<double>(3));
    std::vector<double> y(20);
    for (std::size_t i = 0; i < 20; ++i) {
      for (double& v : x[i]) v = rng.uniform01() * 5.0;
      y[i] = (x[i][0] > 2.0 ? 0.6 : 0.1) + 0.3 * x[i][1] / 5.0 + 0.1 * rng.uniform01();
    }
    const int depth = 1 + fixture % 3;
    const std::size_t leaf = 1 + static_cast<std::size_t>(fixture % 4);
    const TreeModel t = fit_tree(matrix_of(x, y), TreeParams{depth, leaf});
    const std::vector<TreeNode> expected = oracle::brute_tree(x, y, depth, leaf);
    ASSERT_EQ(t.nodes.size(), expected.size()) << fixture;
    for (std::size_t k = 0; k < expected.size(); ++k) {
      EXPECT_EQ(t.nodes[k].feature, expected[k].feature) << fixture << "/" << k;
      EXPECT_EQ(t.nodes[k].threshold, expected[k].threshold) << fixture << "/" << k;
      EXPECT_EQ(t.nodes[k].left, expected[k].left);
      EXPECT_EQ(t.nodes[k].right, expected[k].right);
      EXPECT_EQ(t.nodes[k].samples, expected[k].samples);
      EXPECT_NEAR(t.nodes[k].value, expected[k].value, 1e-12);
    }
  }
}

TEST(FitTree, RespectsLimits) {
  Rng rng(4);
  oracle::Rows x(200, std::vector<double>(2));
  std::vector<double> y(200);
  for (std::size_t i = 0; i < 200; ++i) {
    x[i] = {rng.uniform01(), rng.uniform01()};
    y[i] = rng.uniform01();
  }
  const TreeModel t = fit_tree(matrix_of(x, y), TreeParams{3, 7});
  std::function<int(int)> depth = [&](int node) -> int {
    if (t.nodes[node].is_leaf()) return 0;
    return 1 + std::max(depth(t.nodes[node].left), depth(t.nodes[node].right));
  };
  EXPECT_LE(depth(0), 3);
  for (const TreeNode& n : t.nodes) EXPECT_GE(n.samples, 7u);
}

TEST(Predict, RandomModelIsReproducible) {
  oracle::Rows x(30, std::vector<double>{0.0});
  std::vector<double> y(30, 0.0);
  const FeatureMatrix m = matrix_of(x, y);
  const RegressionModel model = RandomModel{99};
  const auto a = predict(model, m, 3);
  EXPECT_EQ(a, predict(model, m, 3));
  EXPECT_NE(a, predict(model, m, 4));
  for (double v : a) {
    EXPECT_GE(v, 0.0);
    EXPECT_LT(v, 1.0);
  }
}

TEST(Predict, SchemaChecked) {
  oracle::Rows x = {{1, 2}, {2, 3}, {3, 5}};
  std::vector<double> y = {1, 2, 3};
  const RegressionModel linear = fit_linear(matrix_of(x, y));
  oracle::Rows narrow = {{1}};
  std::vector<double> y1 = {0};
  EXPECT_THROW(predict(linear, matrix_of(narrow, y1)), ValidationError);
}

TEST(Regressor, Names) {
  for (RegressorKind k : {RegressorKind::Linear, RegressorKind::DecisionTree, RegressorKind::Random}) {
    EXPECT_EQ(parse_regressor(to_string(k)), k);
  }
  EXPECT_THROW(parse_regressor("svm"), ValidationError);
  EXPECT_EQ(kind_of(RegressionModel{TreeModel{}}), RegressorKind::DecisionTree);
}

}  // namespace
}  // namespace docsum

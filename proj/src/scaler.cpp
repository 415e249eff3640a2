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

#include "docsum/scaler.hpp"

#include <algorithm>
#include <stdexcept>

#include "docsum/error.hpp"

namespace docsum {

ScalerParams fit_scaler(const FeatureMatrix& matrix) {
  if (matrix.empty()) throw std::invalid_argument("fit_scaler: empty matrix");
  ScalerParams params;
  auto first = matrix.row(0);
  params.min.assign(first.begin(), first.end());
  params.max.assign(first.begin(), first.end());
  for (std::size_t i = 1; i < matrix.rows(); ++i) {
    auto r = matrix.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) {
      params.min[j] = std::min(params.min[j], r[j]);
      params.max[j] = std::max(params.max[j], r[j]);
    }
  }
  return params;
}

FeatureMatrix apply_scaler(const FeatureMatrix& matrix, const ScalerParams& params) {
  if (params.min.size() != matrix.cols() || params.max.size() != matrix.cols()) {
    throw ValidationError("scaler width " + std::to_string(params.min.size()) +
                          " does not match matrix width " + std::to_string(matrix.cols()));
  }
  FeatureMatrix out = matrix;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    auto r = out.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) {
      const double range = params.max[j] - params.min[j];
      r[j] = range > 0.0 ? (r[j] - params.min[j]) / range : 0.0;
    }
  }
  return out;
}

}  // namespace docsum

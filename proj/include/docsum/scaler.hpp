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

#ifndef DOCSUM_SCALER_HPP_
#define DOCSUM_SCALER_HPP_

#include <vector>

#include "docsum/features.hpp"

namespace docsum {

// Per-column min and max over the rows the scaler was fitted on.
struct ScalerParams {
  std::vector<double> min;
  std::vector<double> max;

  bool operator==(const ScalerParams&) const = default;
};

// Throws std::invalid_argument on an empty matrix.
ScalerParams fit_scaler(const FeatureMatrix& matrix);

// (x - min) / (max - min) per column; constant columns map to 0. Values
// outside the fitted range are not clamped. Throws ValidationError when the
// widths differ.
FeatureMatrix apply_scaler(const FeatureMatrix& matrix, const ScalerParams& params);

}  // namespace docsum

#endif  // DOCSUM_SCALER_HPP_
